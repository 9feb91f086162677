#pragma once

#include <cstdint>
#include <vector>

#include "k19/quotient.hpp"

namespace k19 {

enum class Optimality { proven, heuristic };

struct CocliqueResult {
    int size = 0;
    std::vector<int> members;  // ascending vertex indices
    Optimality optimality = Optimality::heuristic;
    std::uint64_t node_count = 0;
};

/// True iff vs spans no edge. Throws on out-of-range vertices.
bool is_coclique(const BinaryGraph& g, const std::vector<int>& vs);

/// Maximum independent set via branch-and-bound max clique on the complement
/// with greedy-coloring bounds. Deterministic: branching in ascending vertex
/// index, first optimum kept. Requires n <= 64.
CocliqueResult max_coclique_exact(const BinaryGraph& g);

/// All independent sets of size exactly k, in lexicographic vertex order.
/// Requires n <= 24.
std::vector<std::vector<int>> enumerate_max_cocliques(const BinaryGraph& g, int k);

/// Randomized greedy completion plus (1,2)-swap / plateau local search within
/// `budget` move attempts. Reproducible for a fixed (seed, budget); the result
/// never shrinks below a supplied valid initial set, and members are
/// re-verified before returning. Throws when `initial` is not a coclique.
CocliqueResult heuristic_coclique(const BinaryGraph& g, std::uint64_t seed,
                                  std::uint64_t budget,
                                  const std::vector<int>& initial = {});

}  // namespace k19
