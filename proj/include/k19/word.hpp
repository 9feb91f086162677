#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace k19 {

/// Binary word of length <= 24 stored as a single bitmask.
///
/// Coordinates are 1-based in all I/O (support sets like `{1,8,19}`) and
/// 0-based internally: bit i of the mask holds coordinate i+1.
class Word {
public:
    static constexpr int kMaxLength = 24;

    Word() = default;
    Word(int length, std::uint32_t bits);

    static Word zero(int length) { return Word(length, 0); }
    static Word from_support(int length, std::initializer_list<int> coords);
    static Word from_support(int length, const std::vector<int>& coords);

    /// Accepts a support set `{i,j,...}` with strictly increasing 1-based
    /// indices, or a bitstring of exactly `length` characters `0`/`1` with
    /// coordinate 1 leftmost.
    static Word parse(std::string_view text, int length);

    int length() const { return length_; }
    std::uint32_t bits() const { return bits_; }
    int weight() const;
    bool test(int coordinate) const;  // 1-based
    std::vector<int> support() const;

    std::string render() const;  // canonical support-set form, e.g. "{2,11,14}"
    std::string bitstring() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::uint32_t bits_ = 0;
    std::uint8_t length_ = 0;
};

int weight(const Word& w);

/// XOR; the support of the result is the symmetric difference of supports.
/// Throws std::invalid_argument on length mismatch.
Word add(const Word& a, const Word& b);

/// Parity of |supp(a) ∩ supp(b)|. Throws on length mismatch.
int dot(const Word& a, const Word& b);

/// Hamming distance, i.e. weight(add(a, b)).
int distance(const Word& a, const Word& b);

// Total orders on words of equal length. by_bits is the plain numeric order;
// by_weight_bits is the canonical order of nonlinear code files;
// by_weight_support reads like a low-weight table (weight, then the support
// sequence lexicographically).
bool by_bits(const Word& a, const Word& b);
bool by_weight_bits(const Word& a, const Word& b);
bool by_weight_support(const Word& a, const Word& b);

}  // namespace k19
