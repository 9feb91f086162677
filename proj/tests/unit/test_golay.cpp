#include <map>
#include <set>

#include <doctest.h>

#include "k19/claims.hpp"
#include "k19/golay.hpp"

using namespace k19;

TEST_CASE("golden generators pass the checksum gate") {
    const GeneratorSet& g = GeneratorSet::golden();
    CHECK(g.checksum() == kGoldenChecksum);
    CHECK(g.generator_rows().size() == 12);
    CHECK(g.m[0].render() == "{1,8,9,12,16,17,18,19}");
    CHECK(g.s[0].render() == "{1,4,7,9}");
    CHECK(g.r2.render() == "{2,4,6,7,8,13,14,16,17,18}");
    CHECK(g.s5.render() == "{3,5,7,10}");
}

TEST_CASE("generator matrices have full rank") {
    const GeneratorSet& g = GeneratorSet::golden();
    CHECK(row_reduce(generator_matrix(g)).rank == 12);
    CHECK(row_reduce(extended_generator_matrix(g)).rank == 12);
    CHECK(generator_matrix(g).length() == 19);
    CHECK(extended_generator_matrix(g).length() == 24);
}

TEST_CASE("extension rows append after coordinate 19") {
    const GeneratorSet& g = GeneratorSet::golden();
    GenMatrix ext = extended_generator_matrix(g);
    for (int i = 0; i < 12; ++i) {
        // the first 19 coordinates reproduce the short generator
        for (int col = 1; col <= 19; ++col)
            CHECK(ext.rows[i].test(col) == g.generator_rows()[i].test(col));
        for (int col = 20; col <= 24; ++col)
            CHECK(ext.rows[i].test(col) == g.p_rows[i].test(col - 19));
    }
}

TEST_CASE("extended code is self-dual and doubly even") {
    LinearCode dt = build_D_tilde();
    CHECK(dt.dim() == 12);
    CHECK(dt.length() == 24);
    CHECK(verify_self_dual(dt).pass);
    CHECK(verify_doubly_even(dt).pass);
}

TEST_CASE("self-dual verifier rejects a non-self-dual code") {
    // the even-weight code of length 4: self-orthogonal complement mismatch
    LinearCode c = LinearCode::from_generators(
        4, {Word::parse("1100", 4), Word::parse("0110", 4), Word::parse("0011", 4)});
    Certificate cert = verify_self_dual(c);
    CHECK(!cert.pass);
    CHECK(!cert.witness.is_null());

    LinearCode odd = LinearCode::from_generators(2, {Word::parse("10", 2)});
    CHECK(!verify_self_dual(odd).pass);  // basis word not orthogonal to itself
}

TEST_CASE("doubly-even verifier rejects a singly-even code") {
    LinearCode c = LinearCode::from_generators(4, {Word::parse("1100", 4)});
    Certificate cert = verify_doubly_even(c);
    CHECK(!cert.pass);
    CHECK(!cert.witness.is_null());
}

TEST_CASE("weight spectrum matches an independent enumeration oracle") {
    LinearCode dt = build_D_tilde();
    // oracle: walk all 4096 coefficient vectors directly over the basis
    std::map<int, std::uint64_t> oracle;
    const auto& basis = dt.basis();
    for (std::uint32_t mask = 0; mask < (1u << basis.size()); ++mask) {
        std::uint32_t bits = 0;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if ((mask >> j) & 1) bits ^= basis[j].bits();
        ++oracle[Word(24, bits).weight()];
    }
    WeightEnumerator spec = weight_enumerator(dt);
    CHECK(spec.counts == oracle);
    CHECK(spec.counts == claims::golay_spectrum());
    CHECK(spec.total() == 4096);
    CHECK(spec.min_nonzero_weight() == 8);
}

TEST_CASE("puncturing the last five coordinates recovers the short code") {
    LinearCode d = build_D();
    LinearCode dt = build_D_tilde();
    LinearCode back = puncture(dt, {20, 21, 22, 23, 24});
    CHECK(back.length() == 19);
    CHECK(back.dim() == d.dim());
    std::set<std::uint32_t> want, got;
    for (const Word& w : enumerate_span(d)) want.insert(w.bits());
    for (const Word& w : enumerate_span(back)) got.insert(w.bits());
    CHECK(want == got);
}

TEST_CASE("puncture validates its column list") {
    LinearCode dt = build_D_tilde();
    CHECK_THROWS_AS(puncture(dt, {0}), std::invalid_argument);
    CHECK_THROWS_AS(puncture(dt, {25}), std::invalid_argument);
    CHECK_THROWS_AS(puncture(dt, {20, 20}), std::invalid_argument);
}

TEST_CASE("short code has 4096 words and minimum weight 3") {
    LinearCode d = build_D();
    CHECK(d.dim() == 12);
    WeightEnumerator spec = weight_enumerator(d);
    CHECK(spec.total() == 4096);
    CHECK(spec.min_nonzero_weight() == 3);
    CHECK(spec.counts.at(3) == 1);
    CHECK(spec.counts.at(4) == 20);
}

TEST_CASE("corrupting one generator bit changes the checksum") {
    GeneratorSet g = GeneratorSet::golden();
    const std::uint64_t before = g.checksum();
    g.m[2] = add(g.m[2], Word::from_support(19, {5}));
    CHECK(g.checksum() != before);
}
