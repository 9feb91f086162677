#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "k19/claims.hpp"
#include "k19/golay.hpp"
#include "k19/lift.hpp"
#include "k19/quotient.hpp"

using namespace k19;

namespace {

const GeneratorSet& G() { return GeneratorSet::golden(); }

LinearCode M() { return LinearCode::from_generators(19, {G().m.begin(), G().m.end()}); }

NonlinearCode A() {
    static const NonlinearCode a = [] {
        NonlinearCode b = build_B(M(), {G().s[0], G().s[1], G().s[2], G().s[3], G().s5});
        return build_A(b, G().r1, G().r2);
    }();
    return a;
}

}  // namespace

TEST_CASE("B is a 320-word union of five distinct cosets") {
    NonlinearCode b = build_B(M(), {G().s[0], G().s[1], G().s[2], G().s[3], G().s5});
    CHECK(b.words.size() == 320);
    CHECK(b.length == 19);
    CHECK(std::is_sorted(b.words.begin(), b.words.end(), by_weight_bits));
    // the zero word is in no coset: 0 in B would mean some rep lies in M
    CHECK(!b.contains(Word::zero(19)));
    for (const Word& s : {G().s[0], G().s5}) CHECK(b.contains(s));
}

TEST_CASE("build_B rejects representatives sharing a coset") {
    // s1 and s1+m2 represent the same coset of M
    const Word clash = add(G().s[0], G().m[1]);
    CHECK_THROWS_AS(build_B(M(), {G().s[0], clash, G().s[2], G().s[3], G().s5}),
                    std::invalid_argument);
}

TEST_CASE("A is a 1280-word union of four translates of B") {
    NonlinearCode a = A();
    CHECK(a.words.size() == 1280);
    LinearCode d = build_D();
    for (const Word& w : a.words) CHECK(d.contains(w));
    CHECK(a.contains(G().s[1]));                 // s2 in B
    CHECK(a.contains(add(G().s[2], G().r1)));    // s3 + r1 in B + r1
}

TEST_CASE("build_A rejects colliding translates") {
    NonlinearCode b = build_B(M(), {G().s[0], G().s[1], G().s[2], G().s[3], G().s5});
    // translate by an element of M: B + m = B, a guaranteed collision
    CHECK_THROWS_AS(build_A(b, G().m[0], G().r2), std::invalid_argument);
}

TEST_CASE("nonlinear code rejects duplicates and mixed lengths") {
    const Word w = Word::parse("{1,2}", 19);
    CHECK_THROWS_AS(NonlinearCode::from_words(19, {w, w}), std::invalid_argument);
    CHECK_THROWS_AS(NonlinearCode::from_words(19, {w, Word::zero(12)}), std::invalid_argument);
}

TEST_CASE("minimum distance of A is 5 with the claimed witness difference") {
    DistanceResult d = min_distance(A(), 1);
    CHECK(d.distance == 5);
    CHECK(add(d.a, d.b).weight() == 5);
    // the two claimed closest words really are at distance 5
    CHECK(distance(G().s[1], add(G().s[2], G().r1)) == 5);
    CHECK(add(G().s[1], add(G().s[2], G().r1)) == claims::distance_witness_word());
}

TEST_CASE("minimum distance is thread-count independent") {
    DistanceResult one = min_distance(A(), 1);
    DistanceResult four = min_distance(A(), 4);
    CHECK(one.distance == four.distance);
    CHECK(one.a == four.a);
    CHECK(one.b == four.b);
}

TEST_CASE("minimum distance agrees with a naive pair scan") {
    // random 64-word subsets keep the naive oracle cheap
    std::mt19937 rng(5);
    std::vector<Word> pool = A().words;
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Word> sub(pool.begin(), pool.begin() + 64);
        NonlinearCode code = NonlinearCode::from_words(19, sub);
        int naive = 19;
        for (std::size_t i = 0; i < code.words.size(); ++i)
            for (std::size_t j = i + 1; j < code.words.size(); ++j)
                naive = std::min(naive, distance(code.words[i], code.words[j]));
        CHECK(min_distance(code, 3).distance == naive);
    }
}

TEST_CASE("min_distance needs two words") {
    CHECK_THROWS_AS(min_distance(NonlinearCode::from_words(19, {Word::zero(19)}), 1),
                    std::invalid_argument);
}

TEST_CASE("gamma-independence and popcount routes agree on A") {
    LowWeightSet s = extract_S(build_D());
    Certificate cert = verify_independent_in_gamma(A(), s, 2);
    CHECK(cert.pass);
    CHECK(cert.metrics["pairs"] == 818560);
    CHECK(cert.metrics["edges_in_gamma"] == 0);
    CHECK(cert.metrics["route_disagreements"] == 0);
}

TEST_CASE("gamma-independence fails once a close pair is planted") {
    LowWeightSet s = extract_S(build_D());
    std::vector<Word> words = A().words;
    // plant a distance-3 neighbor of an existing codeword
    words.push_back(add(words.front(), s.words.front()));
    NonlinearCode bad = NonlinearCode::from_words(19, words);
    Certificate cert = verify_independent_in_gamma(bad, s, 1);
    CHECK(!cert.pass);
    CHECK(cert.metrics["edges_in_gamma"].get<std::uint64_t>() > 0);
}

TEST_CASE("code files round trip") {
    NonlinearCode a = A();
    DistanceResult d = min_distance(a, 1);
    std::ostringstream out;
    write_code_file(out, a, d);
    const std::string text = out.str();
    CHECK(text.rfind("# {", 0) == 0);  // JSON header comment first
    CHECK(text.find("\"min_distance\":5") != std::string::npos);

    std::istringstream in(text);
    NonlinearCode back = read_code_file(in);
    CHECK(back.length == a.length);
    CHECK(back.words == a.words);
    CHECK(back.digest() == a.digest());
}

TEST_CASE("code files accept bitstrings and infer length from them") {
    std::istringstream in("# free-form comment\n0100000000100100000\n1001001010000000000\n");
    NonlinearCode code = read_code_file(in);
    CHECK(code.length == 19);
    CHECK(code.words.size() == 2);
    CHECK(code.contains(Word::parse("{2,11,14}", 19)));
}

TEST_CASE("code file errors carry line numbers") {
    std::istringstream bad("{1,4}\n{9,oops}\n");
    try {
        read_code_file(bad, 19);
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::istringstream empty("# nothing\n\n");
    CHECK_THROWS_AS(read_code_file(empty), std::invalid_argument);
}

TEST_CASE("digest distinguishes different codes") {
    NonlinearCode a = A();
    std::vector<Word> words = a.words;
    words.pop_back();
    NonlinearCode shorter = NonlinearCode::from_words(19, words);
    CHECK(a.digest() != shorter.digest());
    CHECK(a.digest().rfind("fnv1a64:", 0) == 0);
}
