#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k19/certificate.hpp"
#include "k19/coclique.hpp"
#include "k19/golay.hpp"
#include "k19/kissing.hpp"
#include "k19/lift.hpp"
#include "k19/quotient.hpp"

namespace k19 {

struct PipelineOptions {
    int threads = 1;
    std::optional<std::string> base_points_file;  // pre-verified base configuration
};

/// Everything the stages construct, kept for the CLI surfaces.
struct PipelineArtifacts {
    GeneratorSet gens;
    LinearCode D, D_tilde, M, K;
    WeightEnumerator spectrum_D_tilde;
    LowWeightSet S;
    std::optional<QuotientCoords> coords;
    std::optional<ClassifiedCosets> table;
    std::optional<BinaryGraph> clebsch;
    std::optional<CocliqueResult> clebsch_max;
    std::uint64_t clebsch_coclique_count = 0;
    std::optional<NonlinearCode> B, A;
    std::optional<DistanceResult> dist;
    std::string emitted_vectors;  // point-file text for A
};

struct PipelineResult {
    std::vector<Certificate> certificates;
    PipelineArtifacts artifacts;

    bool all_pass() const;
    const Certificate* find(const std::string& claim) const;
};

/// Stage names in execution order.
enum class Stage {
    verify_golay,
    table1,
    clebsch,
    cocliques,
    build_code,
    check_distance,
    emit_vectors,
    verify_config,
};

/// Claim ids owned by each stage, in emission order.
std::vector<std::string> stage_claims(Stage s);
std::string stage_name(Stage s);

/// Run every stage in order. A stage that throws yields failing certificates
/// for every claim it owns (witness records the error), and downstream stages
/// that lose their inputs do the same; the claim list is identical on every
/// run.
PipelineResult run_pipeline(const GeneratorSet& gens, const PipelineOptions& opts = {});

/// Run stages up to and including `last`; later stages are skipped entirely.
PipelineResult run_pipeline_until(Stage last, const GeneratorSet& gens,
                                  const PipelineOptions& opts = {});

}  // namespace k19
