#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k19/word.hpp"

namespace k19::claims {

// Expected values the certificates compare computed artifacts against.
// Verification targets only; nothing here feeds the construction itself.

struct Table1Row {
    std::string label;          // "s1+M" .. "s5+M"
    std::uint8_t image;         // class in K/M, e_i encoded as bit i-1
    std::vector<Word> words;    // reading order of the table row
};

const std::vector<Table1Row>& table1();

/// All 21 claimed low-weight words, (weight, support-lex) sorted.
const std::vector<Word>& low_weight_words();

struct TwoWordIdentity {
    int m_index;  // 0-based index into m1..m6
    Word left, right;
};

const std::array<TwoWordIdentity, 6>& step3_identities();

/// Connection set {e1, e2, e3, e4, e1+e2+e3+e4}.
const std::vector<std::uint8_t>& sigma();

/// Claimed weight spectrum of the extended code.
const std::map<int, std::uint64_t>& golay_spectrum();

/// The weight-5 difference of the claimed minimal pair (s2, s3 + r1).
const Word& distance_witness_word();

struct SrgParams { int n, k, lambda, mu; };
constexpr SrgParams kClebschParams{16, 5, 0, 2};

constexpr std::uint64_t kSizeM = 64;
constexpr std::uint64_t kCosetsKM = 16;
constexpr std::uint64_t kCosetsDK = 4;
constexpr std::uint64_t kSizeB = 320;
constexpr std::uint64_t kSizeA = 1280;
constexpr std::uint64_t kBasePoints = 10668;
constexpr std::uint64_t kTotalPoints = 11948;

}  // namespace k19::claims
