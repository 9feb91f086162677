#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "k19/word.hpp"

namespace k19 {

/// Ordered list of equal-length rows.
struct GenMatrix {
    std::vector<Word> rows;

    GenMatrix() = default;
    explicit GenMatrix(std::vector<Word> r);  // validates equal lengths

    int length() const;  // row length, 0 when empty
};

struct RowReduction {
    GenMatrix rref;                  // same row count; zero rows at the bottom
    int rank = 0;
    std::vector<int> pivot_columns;  // 1-based, ascending
};

/// Gauss-Jordan over GF(2). Deterministic: pivots are chosen leftmost-first,
/// rows processed top-down.
RowReduction row_reduce(const GenMatrix& m);

/// Linear code held as a row-reduced basis. Immutable after construction.
class LinearCode {
public:
    LinearCode() = default;  // trivial code of length 0

    static LinearCode from_generators(int length, const std::vector<Word>& gens);
    static LinearCode trivial(int length);

    int length() const { return length_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Word>& basis() const { return basis_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }
    std::uint64_t size() const { return std::uint64_t{1} << dim(); }

    bool contains(const Word& w) const;

    /// Coefficients of w over basis() rows (bit j <-> row j), or nullopt when
    /// w is not in the code.
    std::optional<std::uint32_t> coefficients(const Word& w) const;

private:
    int length_ = 0;
    std::vector<Word> basis_;   // RREF, nonzero rows only
    std::vector<int> pivots_;   // 1-based, one per basis row
};

/// All 2^dim codewords in lexicographic order of the coefficient vector over
/// the stored basis (row 0 is the most significant coefficient). Refuses
/// dim > 24.
std::vector<Word> enumerate_span(const LinearCode& c);

struct Coset {
    Word representative;      // first member in enumeration order of `big`
    std::vector<Word> words;  // in enumeration order of `big`
};

/// Partition of `big` into cosets of `small`. Requires small ⊆ big and that
/// small's basis together with `reps` spans big; throws otherwise. Cosets are
/// ordered by first appearance in the enumeration of `big`.
std::vector<Coset> coset_decompose(const LinearCode& big, const LinearCode& small,
                                   const std::vector<Word>& reps);

}  // namespace k19
