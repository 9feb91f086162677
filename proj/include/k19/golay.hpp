#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "k19/certificate.hpp"
#include "k19/gf2.hpp"
#include "k19/word.hpp"

namespace k19 {

/// The compiled-in construction data: twelve length-19 generators, the extra
/// word s5, and the twelve width-5 extension rows. This is the single trusted
/// transcription point; everything else in the pipeline is derived from it.
struct GeneratorSet {
    std::array<Word, 6> m;       // m1..m6
    std::array<Word, 4> s;       // s1..s4
    Word r1, r2;
    Word s5;
    std::array<Word, 12> p_rows; // length-5 extensions, row i extends generator i

    /// m1..m6, s1..s4, r1, r2 in generator-matrix row order.
    std::vector<Word> generator_rows() const;

    std::uint64_t checksum() const;

    /// The checksum-verified golden instance.
    static const GeneratorSet& golden();
};

/// Frozen checksum of the golden transcription.
inline constexpr std::uint64_t kGoldenChecksum = 0xb92e4f3f0660b261ULL;

GenMatrix generator_matrix(const GeneratorSet& g);           // 12 x 19
GenMatrix extended_generator_matrix(const GeneratorSet& g);  // 12 x 24, columns 20..24 appended

/// Length-19 code spanned by the twelve generators.
LinearCode build_D(const GeneratorSet& g = GeneratorSet::golden());

/// Length-24 code spanned by the extended rows.
LinearCode build_D_tilde(const GeneratorSet& g = GeneratorSet::golden());

/// Pass iff every basis pair is orthogonal and 2*dim == length.
Certificate verify_self_dual(const LinearCode& c);

/// Pass iff every codeword weight is divisible by 4 (exhaustive enumeration).
Certificate verify_doubly_even(const LinearCode& c);

struct WeightEnumerator {
    std::map<int, std::uint64_t> counts;

    std::uint64_t total() const;
    /// Smallest weight with a nonzero count among nonzero weights; 0 when the
    /// code has no nonzero word.
    int min_nonzero_weight() const;
};

WeightEnumerator weight_enumerator(const LinearCode& c);

/// Delete the listed 1-based columns from every basis row, then re-row-reduce.
LinearCode puncture(const LinearCode& c, const std::vector<int>& columns);

}  // namespace k19
