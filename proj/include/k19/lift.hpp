#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "k19/certificate.hpp"
#include "k19/gf2.hpp"
#include "k19/quotient.hpp"
#include "k19/word.hpp"

namespace k19 {

/// Unstructured code: a duplicate-free word list in canonical
/// (weight, bitmask) order.
struct NonlinearCode {
    int length = 0;
    std::vector<Word> words;

    static NonlinearCode from_words(int length, std::vector<Word> ws);

    bool contains(const Word& w) const;

    /// FNV-1a over the canonical rendered lines; identifies the word set.
    std::string digest() const;
};

/// Union of the five cosets rep_i + M (320 words). Throws when two
/// representatives land in the same coset.
NonlinearCode build_B(const LinearCode& M, const std::array<Word, 5>& reps);

/// B ∪ (B+r1) ∪ (B+r2) ∪ (B+r1+r2). Throws when translates collide, which
/// would mean r1, r2 are dependent modulo span(B).
NonlinearCode build_A(const NonlinearCode& B, const Word& r1, const Word& r2);

struct DistanceResult {
    int distance = 0;
    Word a, b;  // first minimal pair in canonical order
};

/// Exact minimum over all unordered pairs; no early exit. Requires >= 2 words.
DistanceResult min_distance(const NonlinearCode& c, int threads = 1);

/// Pass iff no pairwise difference lies in S. Cross-checked against the raw
/// popcount route (min distance >= 5); a disagreement between the two routes
/// fails the certificate.
Certificate verify_independent_in_gamma(const NonlinearCode& c, const LowWeightSet& S,
                                        int threads = 1);

// Code file I/O: a `# {...}` JSON header comment followed by one canonical
// word per line. `#` comment lines and blank lines are ignored.
void write_code_file(std::ostream& out, const NonlinearCode& c,
                     const std::optional<DistanceResult>& dist);
NonlinearCode read_code_file(std::istream& in, std::optional<int> length_hint = {});

}  // namespace k19
