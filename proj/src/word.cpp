#include "k19/word.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace k19 {

namespace {

[[noreturn]] void bad_word(const std::string& msg) {
    throw std::invalid_argument("Word: " + msg);
}

}  // namespace

Word::Word(int length, std::uint32_t bits) {
    if (length < 0 || length > kMaxLength) bad_word("length must be in [0,24]");
    if (length < 32 && (bits >> length) != 0) bad_word("bits set beyond length");
    length_ = static_cast<std::uint8_t>(length);
    bits_ = bits;
}

Word Word::from_support(int length, std::initializer_list<int> coords) {
    return from_support(length, std::vector<int>(coords));
}

Word Word::from_support(int length, const std::vector<int>& coords) {
    std::uint32_t bits = 0;
    for (int c : coords) {
        if (c < 1 || c > length) bad_word("support coordinate out of range");
        bits |= std::uint32_t{1} << (c - 1);
    }
    return Word(length, bits);
}

Word Word::parse(std::string_view text, int length) {
    if (text.empty()) bad_word("empty input");
    if (text.front() == '{') {
        if (text.back() != '}') bad_word("unterminated support set");
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<int> coords;
        int prev = 0;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            int value = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                bad_word("bad support entry '" + std::string(tok) + "'");
            if (value <= prev) bad_word("support indices must be strictly increasing");
            prev = value;
            coords.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return from_support(length, coords);
    }
    // bitstring form, coordinate 1 leftmost
    if (static_cast<int>(text.size()) != length)
        bad_word("bitstring length does not match word length");
    std::uint32_t bits = 0;
    for (int i = 0; i < length; ++i) {
        char c = text[i];
        if (c == '1')
            bits |= std::uint32_t{1} << i;
        else if (c != '0')
            bad_word("bitstring may contain only 0/1");
    }
    return Word(length, bits);
}

int Word::weight() const { return std::popcount(bits_); }

bool Word::test(int coordinate) const {
    if (coordinate < 1 || coordinate > length_) bad_word("coordinate out of range");
    return (bits_ >> (coordinate - 1)) & 1;
}

std::vector<int> Word::support() const {
    std::vector<int> out;
    out.reserve(weight());
    for (std::uint32_t t = bits_; t != 0; t &= t - 1)
        out.push_back(std::countr_zero(t) + 1);
    return out;
}

std::string Word::render() const {
    std::string out = "{";
    bool first = true;
    for (int c : support()) {
        if (!first) out += ',';
        out += std::to_string(c);
        first = false;
    }
    out += '}';
    return out;
}

std::string Word::bitstring() const {
    std::string out(length_, '0');
    for (int i = 0; i < length_; ++i)
        if ((bits_ >> i) & 1) out[i] = '1';
    return out;
}

int weight(const Word& w) { return w.weight(); }

namespace {
void require_same_length(const Word& a, const Word& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("Word: length mismatch (" + std::to_string(a.length()) +
                                    " vs " + std::to_string(b.length()) + ")");
}
}  // namespace

Word add(const Word& a, const Word& b) {
    require_same_length(a, b);
    return Word(a.length(), a.bits() ^ b.bits());
}

int dot(const Word& a, const Word& b) {
    require_same_length(a, b);
    return std::popcount(a.bits() & b.bits()) & 1;
}

int distance(const Word& a, const Word& b) {
    require_same_length(a, b);
    return std::popcount(a.bits() ^ b.bits());
}

bool by_bits(const Word& a, const Word& b) { return a.bits() < b.bits(); }

bool by_weight_bits(const Word& a, const Word& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.bits() < b.bits();
}

bool by_weight_support(const Word& a, const Word& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    // Equal weight: the support sequences differ first at the lowest bit of
    // the XOR, and the word owning that bit has the smaller entry there.
    std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return (a.bits() >> std::countr_zero(diff)) & 1;
}

}  // namespace k19
