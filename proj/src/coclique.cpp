#include "k19/coclique.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace k19 {

bool is_coclique(const BinaryGraph& g, const std::vector<int>& vs) {
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("is_coclique: vertex out of range");
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return false;
    return true;
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const BinaryGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= std::uint64_t{1} << v;
    return adj;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Max clique branch-and-bound over candidate bitmasks. Branching follows
// ascending vertex index; the bound is the greedy coloring number of the
// candidate set, computed in the same ascending order.
struct CliqueSolver {
    int n;
    const std::vector<std::uint64_t>& adj;  // clique-side adjacency
    std::uint64_t best_mask = 0;
    int best = 0;
    std::uint64_t nodes = 0;

    int color_bound(std::uint64_t cand) const {
        int colors = 0;
        while (cand) {
            ++colors;
            std::uint64_t cls = cand;
            while (cls) {
                int v = std::countr_zero(cls);
                cand &= ~(std::uint64_t{1} << v);
                cls &= ~(adj[v] | (std::uint64_t{1} << v));
            }
        }
        return colors;
    }

    void expand(std::uint64_t clique, int size, std::uint64_t cand) {
        ++nodes;
        if (size + std::popcount(cand) <= best) return;
        if (size + color_bound(cand) <= best) return;
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            std::uint64_t next = clique | (std::uint64_t{1} << v);
            std::uint64_t rest = cand & adj[v];
            if (size + 1 > best) {
                best = size + 1;
                best_mask = next;
            }
            if (rest) expand(next, size + 1, rest);
        }
    }
};

}  // namespace

CocliqueResult max_coclique_exact(const BinaryGraph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("max_coclique_exact: more than 64 vertices");
    CocliqueResult res;
    res.optimality = Optimality::proven;
    if (n == 0) return res;

    // Independent sets of g are cliques of the complement.
    std::vector<std::uint64_t> adj = adjacency_masks(g);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> comp(n);
    for (int u = 0; u < n; ++u)
        comp[u] = full & ~(adj[u] | (std::uint64_t{1} << u));

    CliqueSolver solver{n, comp};
    solver.expand(0, 0, full);
    res.size = solver.best;
    res.members = mask_to_vertices(solver.best_mask);
    res.node_count = solver.nodes;
    if (!is_coclique(g, res.members))
        throw std::logic_error("max_coclique_exact: post-hoc verification failed");
    return res;
}

std::vector<std::vector<int>> enumerate_max_cocliques(const BinaryGraph& g, int k) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("enumerate_max_cocliques: more than 24 vertices");
    if (k < 0) throw std::invalid_argument("enumerate_max_cocliques: negative size");
    std::vector<std::uint64_t> adj = adjacency_masks(g);
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    std::uint64_t chosen_adj = 0;

    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            out.push_back(chosen);
            return;
        }
        int need = k - static_cast<int>(chosen.size());
        for (int v = start; v + need <= n; ++v) {
            if ((chosen_adj >> v) & 1) continue;
            chosen.push_back(v);
            std::uint64_t saved = chosen_adj;
            chosen_adj |= adj[v];
            self(self, v + 1);
            chosen_adj = saved;
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

CocliqueResult heuristic_coclique(const BinaryGraph& g, std::uint64_t seed, std::uint64_t budget,
                                  const std::vector<int>& initial) {
    const int n = g.vertex_count();
    if (!is_coclique(g, initial))
        throw std::invalid_argument("heuristic_coclique: initial set is not a coclique");

    std::vector<std::vector<int>> nbrs(n);
    for (int u = 0; u < n; ++u) nbrs[u] = g.neighbors(u);

    std::vector<char> in_set(n, 0);
    std::vector<int> conflicts(n, 0);  // neighbors inside the current set
    int size = 0;
    auto insert = [&](int v) {
        in_set[v] = 1;
        ++size;
        for (int w : nbrs[v]) ++conflicts[w];
    };
    auto remove = [&](int v) {
        in_set[v] = 0;
        --size;
        for (int w : nbrs[v]) --conflicts[w];
    };
    for (int v : initial)
        if (!in_set[v]) insert(v);

    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;

    auto greedy_fill = [&] {
        std::shuffle(order.begin(), order.end(), rng);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v : order) {
                if (!in_set[v] && conflicts[v] == 0) {
                    insert(v);
                    grew = true;
                }
            }
        }
    };
    greedy_fill();

    std::vector<int> best;
    std::uint64_t nodes = 0;
    auto snapshot_if_better = [&] {
        if (size > static_cast<int>(best.size())) {
            best.clear();
            for (int v = 0; v < n; ++v)
                if (in_set[v]) best.push_back(v);
        }
    };
    snapshot_if_better();

    // (1,2)-swap: remove one member whose removal frees two mutually
    // non-adjacent outside vertices; plateau moves shuffle the boundary.
    std::uniform_int_distribution<int> pick(0, n == 0 ? 0 : n - 1);
    while (nodes < budget && n > 0) {
        ++nodes;
        int v = pick(rng);
        if (in_set[v] || conflicts[v] != 1) continue;
        int blocker = -1;
        for (int w : nbrs[v])
            if (in_set[w]) {
                blocker = w;
                break;
            }
        // Improvement: a second vertex also blocked only by `blocker`.
        int mate = -1;
        for (int w : nbrs[blocker]) {
            if (w == v || in_set[w] || conflicts[w] != 1) continue;
            if (!g.adjacent(w, v)) {
                mate = w;
                break;
            }
        }
        remove(blocker);
        insert(v);
        if (mate >= 0 && conflicts[mate] == 0) insert(mate);
        greedy_fill();
        snapshot_if_better();
    }

    CocliqueResult res;
    res.size = static_cast<int>(best.size());
    res.members = best;
    res.optimality = Optimality::heuristic;
    res.node_count = nodes;
    if (!is_coclique(g, res.members))
        throw std::logic_error("heuristic_coclique: post-hoc verification failed");
    return res;
}

}  // namespace k19
