#include "k19/golay.hpp"

#include <algorithm>
#include <stdexcept>

#include "k19/digest.hpp"

namespace k19 {

namespace {

GeneratorSet make_golden() {
    GeneratorSet g;
    g.m = {Word::from_support(19, {1, 8, 9, 12, 16, 17, 18, 19}),
           Word::from_support(19, {2, 10, 11, 14, 15, 17, 18}),
           Word::from_support(19, {3, 7, 9, 13, 15, 16, 17, 19}),
           Word::from_support(19, {4, 7, 8, 10, 12, 15, 16, 19}),
           Word::from_support(19, {5, 10, 12, 13, 15, 16, 17, 18}),
           Word::from_support(19, {6, 7, 8, 9, 10, 13, 16, 18})};
    g.s = {Word::from_support(19, {1, 4, 7, 9}),
           Word::from_support(19, {1, 5, 6, 18}),
           Word::from_support(19, {1, 3, 12, 15}),
           Word::from_support(19, {1, 10, 13, 19})};
    g.r1 = Word::from_support(19, {1, 3, 5, 6, 7, 13, 14, 15, 18});
    g.r2 = Word::from_support(19, {2, 4, 6, 7, 8, 13, 14, 16, 17, 18});
    g.s5 = Word::from_support(19, {3, 5, 7, 10});
    // Width-5 extension rows; coordinate 1 of each row is column 20.
    g.p_rows = {Word::parse("00000", 5), Word::parse("00001", 5), Word::parse("00000", 5),
                Word::parse("00000", 5), Word::parse("00000", 5), Word::parse("00000", 5),
                Word::parse("11110", 5), Word::parse("01111", 5), Word::parse("10111", 5),
                Word::parse("11011", 5), Word::parse("10101", 5), Word::parse("00110", 5)};
    return g;
}

void feed(std::string& buf, const Word& w) {
    buf.push_back(static_cast<char>(w.length()));
    buf.push_back(static_cast<char>(w.bits() & 0xff));
    buf.push_back(static_cast<char>((w.bits() >> 8) & 0xff));
    buf.push_back(static_cast<char>((w.bits() >> 16) & 0xff));
}

}  // namespace

std::vector<Word> GeneratorSet::generator_rows() const {
    std::vector<Word> rows(m.begin(), m.end());
    rows.insert(rows.end(), s.begin(), s.end());
    rows.push_back(r1);
    rows.push_back(r2);
    return rows;
}

std::uint64_t GeneratorSet::checksum() const {
    std::string buf;
    for (const Word& w : generator_rows()) feed(buf, w);
    feed(buf, s5);
    for (const Word& w : p_rows) feed(buf, w);
    return fnv1a64(buf);
}

const GeneratorSet& GeneratorSet::golden() {
    static const GeneratorSet g = [] {
        GeneratorSet gg = make_golden();
        if (gg.checksum() != kGoldenChecksum)
            throw std::logic_error("GeneratorSet: golden data checksum mismatch (computed 0x" +
                                   hex64(gg.checksum()) + ", expected 0x" +
                                   hex64(kGoldenChecksum) + ")");
        return gg;
    }();
    return g;
}

GenMatrix generator_matrix(const GeneratorSet& g) { return GenMatrix(g.generator_rows()); }

GenMatrix extended_generator_matrix(const GeneratorSet& g) {
    std::vector<Word> rows;
    std::vector<Word> base = g.generator_rows();
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::uint32_t bits = base[i].bits() | (g.p_rows[i].bits() << 19);
        rows.push_back(Word(24, bits));
    }
    return GenMatrix(std::move(rows));
}

LinearCode build_D(const GeneratorSet& g) {
    return LinearCode::from_generators(19, generator_matrix(g).rows);
}

LinearCode build_D_tilde(const GeneratorSet& g) {
    return LinearCode::from_generators(24, extended_generator_matrix(g).rows);
}

Certificate verify_self_dual(const LinearCode& c) {
    Json metrics{{"length", c.length()}, {"dim", c.dim()}};
    for (std::size_t i = 0; i < c.basis().size(); ++i) {
        for (std::size_t j = i; j < c.basis().size(); ++j) {
            if (dot(c.basis()[i], c.basis()[j]) != 0) {
                Json witness{{"row_i", c.basis()[i].render()}, {"row_j", c.basis()[j].render()}};
                return Certificate::failed("self_dual", witness, metrics);
            }
        }
    }
    if (2 * c.dim() != c.length()) {
        Json witness{{"reason", "dimension is not half the length"},
                     {"dim", c.dim()},
                     {"length", c.length()}};
        return Certificate::failed("self_dual", witness, metrics);
    }
    return Certificate::passed("self_dual", metrics);
}

Certificate verify_doubly_even(const LinearCode& c) {
    std::uint64_t checked = 0;
    for (const Word& w : enumerate_span(c)) {
        ++checked;
        if (w.weight() % 4 != 0) {
            Json witness{{"word", w.render()}, {"weight", w.weight()}};
            return Certificate::failed("doubly_even", witness, Json{{"checked", checked}});
        }
    }
    return Certificate::passed("doubly_even", Json{{"checked", checked}});
}

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t t = 0;
    for (const auto& [w, n] : counts) t += n;
    return t;
}

int WeightEnumerator::min_nonzero_weight() const {
    for (const auto& [w, n] : counts)
        if (w > 0 && n > 0) return w;
    return 0;
}

WeightEnumerator weight_enumerator(const LinearCode& c) {
    WeightEnumerator e;
    for (const Word& w : enumerate_span(c)) ++e.counts[w.weight()];
    return e;
}

LinearCode puncture(const LinearCode& c, const std::vector<int>& columns) {
    std::uint32_t drop = 0;
    for (int col : columns) {
        if (col < 1 || col > c.length())
            throw std::invalid_argument("puncture: column out of range");
        const std::uint32_t bit = std::uint32_t{1} << (col - 1);
        if (drop & bit) throw std::invalid_argument("puncture: duplicate column");
        drop |= bit;
    }
    const int new_length = c.length() - std::popcount(drop);
    std::vector<Word> rows;
    rows.reserve(c.basis().size());
    for (const Word& w : c.basis()) {
        std::uint32_t bits = 0;
        int out = 0;
        for (int i = 0; i < c.length(); ++i) {
            if ((drop >> i) & 1) continue;
            if ((w.bits() >> i) & 1) bits |= std::uint32_t{1} << out;
            ++out;
        }
        rows.push_back(Word(new_length, bits));
    }
    return LinearCode::from_generators(new_length, rows);
}

}  // namespace k19
