#include <algorithm>
#include <set>
#include <stdexcept>

#include <doctest.h>

#include "k19/claims.hpp"
#include "k19/golay.hpp"
#include "k19/quotient.hpp"

using namespace k19;

namespace {

const GeneratorSet& G() { return GeneratorSet::golden(); }

LowWeightSet S() {
    static const LowWeightSet s = extract_S(build_D());
    return s;
}

}  // namespace

TEST_CASE("the short code has exactly 21 words of weight 3 or 4") {
    LowWeightSet s = S();
    REQUIRE(s.words.size() == 21);
    CHECK(s.words == claims::low_weight_words());
    int weight3 = 0;
    for (const Word& w : s.words) {
        CHECK(w.weight() >= 3);
        CHECK(w.weight() <= 4);
        weight3 += w.weight() == 3;
    }
    CHECK(weight3 == 1);
    CHECK(s.words.front().render() == "{2,11,14}");
    CHECK(s.contains(Word::parse("{3,5,7,10}", 19)));
    CHECK(!s.contains(Word::parse("{1,2,3}", 19)));
}

TEST_CASE("K is the 10-dimensional span of the low-weight words") {
    LinearCode k = build_K(S());
    CHECK(k.dim() == 10);
    CHECK(k.length() == 19);
    for (const Word& w : S().words) CHECK(k.contains(w));
}

TEST_CASE("quotient coordinates send s_i to e_i and M to zero") {
    LinearCode m = LinearCode::from_generators(19, {G().m.begin(), G().m.end()});
    QuotientCoords coords(m, G().s);
    for (int i = 0; i < 4; ++i) CHECK(coords.coord_of(G().s[i]) == (1u << i));
    for (const Word& w : enumerate_span(m)) CHECK(coords.coord_of(w) == 0);
    CHECK(coords.coord_of(G().s5) == 0b1111);
    // coordinates are additive
    CHECK(coords.coord_of(add(G().s[0], G().s[2])) == 0b0101);
    CHECK(coords.coord_of(add(G().s[1], G().m[3])) == 0b0010);
    CHECK_THROWS_AS(coords.coord_of(G().r1), std::invalid_argument);  // r1 outside K
}

TEST_CASE("two-word identities expressing each m generator inside span(S)") {
    std::vector<Word> targets(G().m.begin(), G().m.end());
    std::vector<std::pair<Word, Word>> pairs;
    for (const claims::TwoWordIdentity& id : claims::step3_identities()) {
        pairs.emplace_back(id.left, id.right);
        CHECK(add(id.left, id.right) == G().m[id.m_index]);  // the identities themselves
    }
    Certificate cert = verify_M_in_K(S(), targets, pairs);
    CHECK(cert.pass);

    // a word with no two-word expression in S must fail
    Certificate bad = verify_M_in_K(S(), std::vector<Word>{Word::parse("{1,2}", 19)});
    CHECK(!bad.pass);
    CHECK(!bad.witness.is_null());
}

TEST_CASE("coset classification reproduces the five claimed rows") {
    LinearCode m = LinearCode::from_generators(19, {G().m.begin(), G().m.end()});
    QuotientCoords coords(m, G().s);
    ClassifiedCosets table = classify_cosets(S(), m, coords);
    REQUIRE(table.cells.size() == 5);

    std::vector<std::uint8_t> images;
    for (const CosetCell& cell : table.cells) images.push_back(cell.image);
    CHECK(images == std::vector<std::uint8_t>{1, 2, 4, 8, 15});

    for (const claims::Table1Row& row : claims::table1()) {
        const CosetCell* cell = nullptr;
        for (const CosetCell& cand : table.cells)
            if (cand.image == row.image) cell = &cand;
        REQUIRE(cell != nullptr);
        std::vector<Word> want = row.words;
        std::sort(want.begin(), want.end(), by_weight_support);
        CHECK(cell->words == want);
        // every member lies in the representative's M-coset
        for (const Word& w : cell->words) CHECK(m.contains(add(w, cell->representative)));
    }
}

TEST_CASE("clebsch cayley graph construction") {
    BinaryGraph g = build_clebsch(claims::sigma());
    CHECK(g.vertex_count() == 16);
    CHECK(g.adjacent(0, 1));        // 0 ^ 1 = e1
    CHECK(g.adjacent(0, 15));       // e1+e2+e3+e4
    CHECK(!g.adjacent(0, 3));       // e1+e2 not in sigma
    CHECK(!g.adjacent(5, 5));       // no loops
    CHECK(g.adjacent(3, 12));       // 3 ^ 12 = 15
    CHECK(g.neighbors(0) == std::vector<int>{1, 2, 4, 8, 15});
    CHECK_THROWS_AS(g.adjacent(0, 16), std::out_of_range);
    CHECK_THROWS_AS(build_clebsch({0, 1}), std::invalid_argument);  // loop element
    CHECK_THROWS_AS(build_clebsch({16}), std::invalid_argument);    // out of F2^4
}

TEST_CASE("strong regularity of the clebsch graph") {
    BinaryGraph g = build_clebsch(claims::sigma());
    CHECK(verify_srg(g, 16, 5, 0, 2).pass);
    CHECK(!verify_srg(g, 16, 5, 1, 2).pass);   // wrong lambda
    CHECK(!verify_srg(g, 16, 4, 0, 2).pass);   // wrong degree
    CHECK(!verify_srg(g, 15, 5, 0, 2).pass);   // wrong vertex count
}

TEST_CASE("a path graph is not strongly regular") {
    BinaryGraph path(3, [](int u, int v) { return (u == 1) != (v == 1); });
    Certificate cert = verify_srg(path, 3, 2, 0, 1);
    CHECK(!cert.pass);
}

TEST_CASE("difference graph on K is 21-regular") {
    LinearCode k = build_K(S());
    BinaryGraph gamma = build_gamma_on_K(k, S());
    CHECK(gamma.vertex_count() == 1024);
    std::uint64_t twice_edges = 0;
    for (int u = 0; u < gamma.vertex_count(); ++u) {
        const std::vector<int> nb = gamma.neighbors(u);
        CHECK(nb.size() == 21);
        twice_edges += nb.size();
        CHECK(!gamma.adjacent(u, u));
    }
    CHECK(twice_edges == 2 * 10752);

    // adjacency oracle and neighbor lists agree on a sample
    for (int u : {0, 1, 17, 512, 1023})
        for (int v : gamma.neighbors(u)) CHECK(gamma.adjacent(u, v));
}

TEST_CASE("difference graph respects the S difference rule") {
    LinearCode d = build_D();
    BinaryGraph gamma = build_difference_graph(d, S());
    CHECK(gamma.vertex_count() == 4096);
    std::vector<Word> words = enumerate_span(d);
    // edges are exactly S-differences: spot-check against the definition
    for (int u : {0, 3, 100, 2048}) {
        std::set<std::uint32_t> expect;
        for (const Word& s : S().words) expect.insert(add(words[u], s).bits());
        std::set<std::uint32_t> got;
        for (int v : gamma.neighbors(u)) got.insert(words[v].bits());
        CHECK(got == expect);
    }
}

TEST_CASE("graph oracles validate vertex ranges") {
    BinaryGraph g = build_clebsch(claims::sigma());
    CHECK_THROWS_AS(g.neighbors(-1), std::out_of_range);
    CHECK_THROWS_AS(g.neighbors(16), std::out_of_range);
    CHECK_THROWS_AS(g.adjacent(-1, 0), std::out_of_range);
}
