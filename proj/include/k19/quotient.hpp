#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "k19/certificate.hpp"
#include "k19/gf2.hpp"
#include "k19/word.hpp"

namespace k19 {

/// Direct-indexed membership table over 19-bit masks (64 KiB). O(1) lookups
/// for the difference-graph edge oracle.
class WordBitTable {
public:
    explicit WordBitTable(std::span<const Word> words);
    bool test(std::uint32_t bits) const {
        const std::size_t slot = bits >> 6;
        return slot < table_.size() && ((table_[slot] >> (bits & 63)) & 1);
    }

private:
    std::vector<std::uint64_t> table_;
};

/// The words of weight 3 or 4 in a code, sorted by (weight, support-lex).
struct LowWeightSet {
    std::vector<Word> words;

    bool contains(const Word& w) const;
};

LowWeightSet extract_S(const LinearCode& D);

/// Row-reduced span of S.
LinearCode build_K(const LowWeightSet& S);

/// F2^4 coordinates on K/M: coord(s_i) = e_i (bit i-1). Built by row-reducing
/// [M basis | s1..s4] once; each query back-substitutes against the pivots.
class QuotientCoords {
public:
    QuotientCoords(const LinearCode& M, const std::array<Word, 4>& s);

    /// Throws std::invalid_argument when x is not in span(M, s1..s4).
    std::uint8_t coord_of(const Word& x) const;

private:
    int length_ = 0;
    std::vector<std::uint64_t> rows_;  // low bits data, high bits coefficient tags
    std::vector<int> pivots_;          // 0-based data columns
};

/// For each m generator, search S for a two-word sum and verify any supplied
/// expected pairs. `expected_pairs[i]` pins the pair for `targets[i]`.
Certificate verify_M_in_K(const LowWeightSet& S, std::span<const Word> targets,
                          std::span<const std::pair<Word, Word>> expected_pairs = {});

struct CosetCell {
    std::uint8_t image = 0;     // class in K/M under the s-basis
    Word representative;        // minimal member in enumeration order
    std::vector<Word> words;    // members of S in this cell, (weight, support-lex) order
};

struct ClassifiedCosets {
    std::vector<CosetCell> cells;  // ordered by image value
};

/// Partition S by M-coset and attach K/M images. Throws when a word of S is
/// not in span(M, s1..s4), which would signal a transcription error.
ClassifiedCosets classify_cosets(const LowWeightSet& S, const LinearCode& M,
                                 const QuotientCoords& coords);

/// Vertex set plus adjacency oracle. Immutable; the oracle must be symmetric
/// and loop-free.
class BinaryGraph {
public:
    using AdjacencyFn = std::function<bool(int, int)>;
    using NeighborsFn = std::function<std::vector<int>(int)>;
    using LabelFn = std::function<std::string(int)>;

    BinaryGraph(int n, AdjacencyFn adjacent, LabelFn label = {}, NeighborsFn neighbors = {});

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const;       // throws on out-of-range vertices
    std::vector<int> neighbors(int u) const;
    std::string label(int u) const;          // vertex index as text when unset

private:
    int n_ = 0;
    AdjacencyFn adjacent_;
    LabelFn label_;
    NeighborsFn neighbors_;
};

/// 16-vertex Cayley graph on F2^4 with connection set sigma: u ~ v iff
/// u+v ∈ sigma. Throws when 0 ∈ sigma (loops) or an element is out of range.
BinaryGraph build_clebsch(const std::vector<std::uint8_t>& sigma);

/// Strong regularity with parameters (n, k, lambda, mu) by exhaustive pair
/// counting.
Certificate verify_srg(const BinaryGraph& g, int n, int k, int lambda, int mu);

/// Difference graph on the span of `code`: vertices are codewords in
/// enumeration order, x ~ y iff x+y lies in S.
BinaryGraph build_difference_graph(const LinearCode& code, const LowWeightSet& S);

/// The working instance on K (1024 vertices, degree |S|).
BinaryGraph build_gamma_on_K(const LinearCode& K, const LowWeightSet& S);

}  // namespace k19
