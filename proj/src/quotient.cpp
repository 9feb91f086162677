#include "k19/quotient.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace k19 {

WordBitTable::WordBitTable(std::span<const Word> words) {
    std::uint32_t max_bits = 0;
    for (const Word& w : words) max_bits = std::max(max_bits, w.bits());
    table_.assign((std::size_t{max_bits} >> 6) + 1, 0);
    for (const Word& w : words) table_[w.bits() >> 6] |= std::uint64_t{1} << (w.bits() & 63);
}

bool LowWeightSet::contains(const Word& w) const {
    return std::any_of(words.begin(), words.end(), [&](const Word& x) { return x == w; });
}

LowWeightSet extract_S(const LinearCode& D) {
    LowWeightSet s;
    for (const Word& w : enumerate_span(D)) {
        int wt = w.weight();
        if (wt == 3 || wt == 4) s.words.push_back(w);
    }
    std::sort(s.words.begin(), s.words.end(), by_weight_support);
    return s;
}

LinearCode build_K(const LowWeightSet& S) {
    if (S.words.empty()) throw std::invalid_argument("build_K: empty set");
    return LinearCode::from_generators(S.words.front().length(), S.words);
}

QuotientCoords::QuotientCoords(const LinearCode& M, const std::array<Word, 4>& s) {
    length_ = M.length();
    // Rows carry their coefficient tag in the high bits: tags 0..5 mark M's
    // basis rows, tags 6..9 mark s1..s4. Reduction keeps tags consistent, so
    // back-substitution reads coordinates straight off the tag.
    std::vector<std::uint64_t> rows;
    std::uint64_t tag = std::uint64_t{1} << length_;
    for (const Word& b : M.basis()) {
        rows.push_back(b.bits() | tag);
        tag <<= 1;
    }
    for (const Word& si : s) {
        if (si.length() != length_)
            throw std::invalid_argument("QuotientCoords: representative length mismatch");
        rows.push_back(si.bits() | tag);
        tag <<= 1;
    }
    const std::uint64_t data_mask = (std::uint64_t{1} << length_) - 1;
    std::size_t r = 0;
    for (int col = 0; col < length_ && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && !((rows[piv] >> col) & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && ((rows[i] >> col) & 1)) rows[i] ^= rows[r];
        pivots_.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i] & data_mask)
            throw std::logic_error("QuotientCoords: reduction failed");
    if (r != M.basis().size() + 4)
        throw std::invalid_argument(
            "QuotientCoords: classes of s1..s4 are not independent modulo M");
    rows.resize(r);
    rows_ = std::move(rows);
}

std::uint8_t QuotientCoords::coord_of(const Word& x) const {
    if (x.length() != length_)
        throw std::invalid_argument("QuotientCoords: word length mismatch");
    std::uint64_t acc = x.bits();
    const std::uint64_t data_mask = (std::uint64_t{1} << length_) - 1;
    for (std::size_t j = 0; j < rows_.size(); ++j)
        if ((acc >> pivots_[j]) & 1) acc ^= rows_[j];
    if (acc & data_mask)
        throw std::invalid_argument("QuotientCoords: word not in span(M, s1..s4): " + x.render());
    std::uint64_t tags = acc >> length_;
    // s-coefficients sit after the M rows.
    return static_cast<std::uint8_t>(tags >> (rows_.size() - 4)) & 0xf;
}

Certificate verify_M_in_K(const LowWeightSet& S, std::span<const Word> targets,
                          std::span<const std::pair<Word, Word>> expected_pairs) {
    Json found = Json::array();
    for (const Word& t : targets) {
        bool hit = false;
        for (std::size_t i = 0; i < S.words.size() && !hit; ++i) {
            for (std::size_t j = i + 1; j < S.words.size() && !hit; ++j) {
                if (add(S.words[i], S.words[j]) == t) {
                    found.push_back(Json{{"target", t.render()},
                                         {"left", S.words[i].render()},
                                         {"right", S.words[j].render()}});
                    hit = true;
                }
            }
        }
        if (!hit) {
            Json witness{{"reason", "no two-word sum in S"}, {"target", t.render()}};
            return Certificate::failed("m_in_span_S", witness);
        }
    }
    for (const auto& [left, right] : expected_pairs) {
        if (!S.contains(left) || !S.contains(right)) {
            Json witness{{"reason", "expected pair not inside S"},
                         {"left", left.render()},
                         {"right", right.render()}};
            return Certificate::failed("m_in_span_S", witness);
        }
    }
    std::size_t idx = 0;
    for (const auto& [left, right] : expected_pairs) {
        if (idx >= targets.size() || add(left, right) != targets[idx]) {
            Json witness{{"reason", "expected pair does not sum to its target"},
                         {"left", left.render()},
                         {"right", right.render()}};
            return Certificate::failed("m_in_span_S", witness);
        }
        ++idx;
    }
    return Certificate::passed("m_in_span_S", Json{{"pairs", found}});
}

ClassifiedCosets classify_cosets(const LowWeightSet& S, const LinearCode& M,
                                 const QuotientCoords& coords) {
    std::map<std::uint8_t, CosetCell> cells;
    for (const Word& w : S.words) {
        std::uint8_t img = coords.coord_of(w);  // throws when w leaves K
        auto [it, fresh] = cells.try_emplace(img);
        if (fresh) {
            it->second.image = img;
            it->second.representative = w;
        }
        it->second.words.push_back(w);
        if (by_bits(w, it->second.representative)) it->second.representative = w;
    }
    ClassifiedCosets out;
    for (auto& [img, cell] : cells) {
        // Same image must mean same M-coset, not merely same quotient value.
        for (const Word& w : cell.words)
            if (!M.contains(add(w, cell.representative)))
                throw std::logic_error("classify_cosets: cell members differ outside M");
        std::sort(cell.words.begin(), cell.words.end(), by_weight_support);
        out.cells.push_back(std::move(cell));
    }
    return out;
}

BinaryGraph::BinaryGraph(int n, AdjacencyFn adjacent, LabelFn label, NeighborsFn neighbors)
    : n_(n), adjacent_(std::move(adjacent)), label_(std::move(label)),
      neighbors_(std::move(neighbors)) {
    if (n_ < 0) throw std::invalid_argument("BinaryGraph: negative vertex count");
}

bool BinaryGraph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("BinaryGraph: vertex out of range");
    if (u == v) return false;
    return adjacent_(u, v);
}

std::vector<int> BinaryGraph::neighbors(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("BinaryGraph: vertex out of range");
    if (neighbors_) return neighbors_(u);
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (v != u && adjacent_(u, v)) out.push_back(v);
    return out;
}

std::string BinaryGraph::label(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("BinaryGraph: vertex out of range");
    return label_ ? label_(u) : std::to_string(u);
}

BinaryGraph build_clebsch(const std::vector<std::uint8_t>& sigma) {
    std::uint32_t mask = 0;
    for (std::uint8_t e : sigma) {
        if (e == 0) throw std::invalid_argument("build_clebsch: 0 in connection set");
        if (e > 15) throw std::invalid_argument("build_clebsch: element outside F2^4");
        mask |= std::uint32_t{1} << e;
    }
    auto adj = [mask](int u, int v) { return (mask >> (u ^ v)) & 1; };
    auto label = [](int u) {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i)
            if ((u >> i) & 1) s[i] = '1';
        return s;
    };
    return BinaryGraph(16, adj, label);
}

Certificate verify_srg(const BinaryGraph& g, int n, int k, int lambda, int mu) {
    Json metrics{{"n", n}, {"k", k}, {"lambda", lambda}, {"mu", mu}};
    if (g.vertex_count() != n) {
        Json witness{{"reason", "vertex count mismatch"}, {"actual", g.vertex_count()}};
        return Certificate::failed("srg", witness, metrics);
    }
    for (int u = 0; u < n; ++u) {
        int deg = static_cast<int>(g.neighbors(u).size());
        if (deg != k) {
            Json witness{{"reason", "degree mismatch"}, {"vertex", u}, {"degree", deg}};
            return Certificate::failed("srg", witness, metrics);
        }
    }
    std::uint64_t pairs = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int t = 0; t < n; ++t)
                if (t != u && t != v && g.adjacent(u, t) && g.adjacent(v, t)) ++common;
            ++pairs;
            int want = g.adjacent(u, v) ? lambda : mu;
            if (common != want) {
                Json witness{{"u", u},
                             {"v", v},
                             {"adjacent", g.adjacent(u, v)},
                             {"common_neighbors", common},
                             {"expected", want}};
                return Certificate::failed("srg", witness, metrics);
            }
        }
    }
    metrics["pairs_checked"] = pairs;
    return Certificate::passed("srg", metrics);
}

namespace {

struct DiffGraphData {
    std::vector<Word> words;
    std::vector<std::uint16_t> index;  // word bits -> vertex, 0xffff when absent
    std::vector<Word> diffs;           // the difference set
    WordBitTable table;

    DiffGraphData(const LinearCode& code, const LowWeightSet& S)
        : words(enumerate_span(code)), table(S.words) {
        index.assign(std::size_t{1} << code.length(), 0xffff);
        for (std::size_t i = 0; i < words.size(); ++i)
            index[words[i].bits()] = static_cast<std::uint16_t>(i);
        diffs = S.words;
    }
};

}  // namespace

BinaryGraph build_difference_graph(const LinearCode& code, const LowWeightSet& S) {
    for (const Word& w : S.words)
        if (!code.contains(w))
            throw std::invalid_argument("build_difference_graph: difference set leaves the code");
    if (code.size() > 0xffff)
        throw std::invalid_argument("build_difference_graph: code too large");
    auto data = std::make_shared<DiffGraphData>(code, S);
    auto adj = [data](int u, int v) {
        return data->table.test(data->words[u].bits() ^ data->words[v].bits());
    };
    auto label = [data](int u) { return data->words[u].render(); };
    auto neighbors = [data](int u) {
        std::vector<int> out;
        out.reserve(data->diffs.size());
        for (const Word& s : data->diffs) {
            std::uint16_t idx = data->index[data->words[u].bits() ^ s.bits()];
            if (idx != 0xffff) out.push_back(idx);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return BinaryGraph(static_cast<int>(data->words.size()), adj, label, neighbors);
}

BinaryGraph build_gamma_on_K(const LinearCode& K, const LowWeightSet& S) {
    return build_difference_graph(K, S);
}

}  // namespace k19
