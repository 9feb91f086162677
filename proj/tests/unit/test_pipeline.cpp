#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "k19/claims.hpp"
#include "k19/pipeline.hpp"

using namespace k19;

namespace {

std::vector<std::string> all_claims() {
    std::vector<std::string> out;
    for (int s = 0; s <= static_cast<int>(Stage::verify_config); ++s)
        for (const std::string& c : stage_claims(static_cast<Stage>(s))) out.push_back(c);
    return out;
}

std::string dump_certificates(const PipelineResult& res) {
    Json arr = Json::array();
    for (const Certificate& c : res.certificates) arr.push_back(c.to_json());
    return arr.dump();
}

}  // namespace

TEST_CASE("the full pipeline passes every claim") {
    PipelineResult res = run_pipeline(GeneratorSet::golden());
    CHECK(res.all_pass());
    const std::vector<std::string> expected = all_claims();
    REQUIRE(res.certificates.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(res.certificates[i].claim == expected[i]);
}

TEST_CASE("headline numbers in the certificates") {
    PipelineResult res = run_pipeline(GeneratorSet::golden());
    CHECK(res.find("prop4.2.size")->metrics["size_a"] == claims::kSizeA);
    CHECK(res.find("prop4.2.size")->metrics["size_b"] == claims::kSizeB);
    CHECK(res.find("prop4.2.distance")->metrics["min_distance"] == 5);
    CHECK(res.find("prop4.2.distance")->metrics["pairs"] == 818560);
    CHECK(res.find("lemma4.1")->metrics["max_coclique"] == 5);
    CHECK(res.find("lemma3.2")->metrics["edges_on_k"] == 10752);
    CHECK(res.find("thm1.1.vectors")->metrics["max_cosine"] == "9/19");
    CHECK(res.find("thm1.1.count")->metrics["added_points"] == claims::kSizeA);
    CHECK(res.find("thm1.1.count")->metrics["claimed_total_with_base"] ==
          claims::kTotalPoints);
    CHECK(res.find("prop2.1.spectrum")->metrics["words"] == 4096);
}

TEST_CASE("artifacts are populated on success") {
    PipelineResult res = run_pipeline(GeneratorSet::golden());
    CHECK(res.artifacts.D.dim() == 12);
    CHECK(res.artifacts.D_tilde.dim() == 12);
    CHECK(res.artifacts.M.dim() == 6);
    CHECK(res.artifacts.K.dim() == 10);
    CHECK(res.artifacts.S.words.size() == 21);
    REQUIRE(res.artifacts.A.has_value());
    CHECK(res.artifacts.A->words.size() == 1280);
    REQUIRE(res.artifacts.dist.has_value());
    CHECK(res.artifacts.dist->distance == 5);
    CHECK(res.artifacts.clebsch_coclique_count == 16);
    CHECK(!res.artifacts.emitted_vectors.empty());
}

TEST_CASE("prefix runs stop at the requested stage") {
    PipelineResult res = run_pipeline_until(Stage::table1, GeneratorSet::golden());
    CHECK(res.certificates.size() == 12);  // 7 golay claims + 5 structure claims
    CHECK(res.all_pass());
    CHECK(res.find("lemma3.2") == nullptr);
    CHECK(!res.artifacts.A.has_value());
}

TEST_CASE("single-bit corruption always fails at least one claim") {
    // every flip must be caught, and the claim list must never change shape
    const std::vector<std::string> expected = all_claims();
    std::mt19937 rng(515);
    for (int trial = 0; trial < 6; ++trial) {
        GeneratorSet g = GeneratorSet::golden();
        const int word_index = static_cast<int>(rng() % 14);
        const int coordinate = static_cast<int>(rng() % 19) + 1;
        const Word flip = Word::from_support(19, {coordinate});
        if (word_index < 6)
            g.m[word_index] = add(g.m[word_index], flip);
        else if (word_index < 10)
            g.s[word_index - 6] = add(g.s[word_index - 6], flip);
        else if (word_index < 11)
            g.r1 = add(g.r1, flip);
        else if (word_index < 12)
            g.r2 = add(g.r2, flip);
        else if (word_index < 13)
            g.s5 = add(g.s5, flip);
        else {
            const int row = static_cast<int>(rng() % 12);
            const int col = static_cast<int>(rng() % 5) + 1;
            g.p_rows[row] = add(g.p_rows[row], Word::from_support(5, {col}));
        }

        PipelineResult res = run_pipeline(g);
        CHECK(!res.all_pass());
        REQUIRE(res.certificates.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(res.certificates[i].claim == expected[i]);
        for (const Certificate& c : res.certificates)
            if (!c.pass) CHECK(!c.witness.is_null());
    }
}

TEST_CASE("certificate output is deterministic across runs and threads") {
    PipelineOptions one;
    one.threads = 1;
    PipelineOptions four;
    four.threads = 4;
    const std::string first = dump_certificates(run_pipeline(GeneratorSet::golden(), one));
    const std::string second = dump_certificates(run_pipeline(GeneratorSet::golden(), one));
    const std::string parallel = dump_certificates(run_pipeline(GeneratorSet::golden(), four));
    CHECK(first == second);
    CHECK(first == parallel);
}

TEST_CASE("a missing base file fails only the final count claim") {
    PipelineOptions opts;
    opts.base_points_file = "/nonexistent/base-points.txt";
    PipelineResult res = run_pipeline(GeneratorSet::golden(), opts);
    CHECK(!res.all_pass());
    const Certificate* count = res.find("thm1.1.count");
    REQUIRE(count != nullptr);
    CHECK(!count->pass);
    CHECK(!count->witness.is_null());
    // everything upstream of the configuration count is unaffected
    for (const Certificate& c : res.certificates)
        if (c.claim != "thm1.1.count") CHECK(c.pass);
}

TEST_CASE("stage names cover the CLI surface") {
    CHECK(stage_name(Stage::verify_golay) == "verify-golay");
    CHECK(stage_name(Stage::verify_config) == "verify-config");
    CHECK(stage_claims(Stage::check_distance) ==
          std::vector<std::string>{"prop4.2.distance", "prop4.2.witness"});
}
