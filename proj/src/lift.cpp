#include "k19/lift.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "k19/digest.hpp"
#include "k19/parallel.hpp"

namespace k19 {

NonlinearCode NonlinearCode::from_words(int length, std::vector<Word> ws) {
    for (const Word& w : ws)
        if (w.length() != length)
            throw std::invalid_argument("NonlinearCode: mixed word lengths");
    std::sort(ws.begin(), ws.end(), by_weight_bits);
    auto dup = std::adjacent_find(ws.begin(), ws.end(),
                                  [](const Word& a, const Word& b) { return a.bits() == b.bits(); });
    if (dup != ws.end()) throw std::invalid_argument("NonlinearCode: duplicate word " + dup->render());
    return NonlinearCode{length, std::move(ws)};
}

bool NonlinearCode::contains(const Word& w) const {
    return std::any_of(words.begin(), words.end(),
                       [&](const Word& x) { return x.bits() == w.bits(); });
}

std::string NonlinearCode::digest() const {
    std::uint64_t h = fnv1a64(std::to_string(length) + "\n");
    for (const Word& w : words) h = fnv1a64(w.render() + "\n", h);
    return "fnv1a64:" + hex64(h);
}

NonlinearCode build_B(const LinearCode& M, const std::array<Word, 5>& reps) {
    std::vector<Word> span = enumerate_span(M);
    std::vector<Word> words;
    words.reserve(reps.size() * span.size());
    for (const Word& rep : reps)
        for (const Word& m : span) words.push_back(add(rep, m));
    try {
        return NonlinearCode::from_words(reps[0].length(), std::move(words));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("build_B: representatives share a coset of M");
    }
}

NonlinearCode build_A(const NonlinearCode& B, const Word& r1, const Word& r2) {
    const Word r12 = add(r1, r2);
    std::vector<Word> words;
    words.reserve(4 * B.words.size());
    for (const Word& w : B.words) {
        words.push_back(w);
        words.push_back(add(w, r1));
        words.push_back(add(w, r2));
        words.push_back(add(w, r12));
    }
    try {
        return NonlinearCode::from_words(B.length, std::move(words));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("build_A: translates of B collide");
    }
}

namespace {

// Orders candidate minima deterministically: distance first, then the index
// pair, so every thread count produces the same witness.
struct PairMin {
    int distance;
    std::size_t i, j;

    static PairMin worst() { return {1 << 30, 0, 0}; }

    bool operator<(const PairMin& o) const {
        return std::tie(distance, i, j) < std::tie(o.distance, o.i, o.j);
    }
};

}  // namespace

DistanceResult min_distance(const NonlinearCode& c, int threads) {
    const std::size_t n = c.words.size();
    if (n < 2) throw std::invalid_argument("min_distance: need at least two words");

    PairMin best = parallel_block_reduce<PairMin>(
        n, threads, 64, PairMin::worst(),
        [&](std::size_t lo, std::size_t hi) {
            PairMin local = PairMin::worst();
            for (std::size_t i = lo; i < hi; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    PairMin cand{distance(c.words[i], c.words[j]), i, j};
                    if (cand < local) local = cand;
                }
            }
            return local;
        },
        [](PairMin a, PairMin b) { return std::min(a, b); });

    return DistanceResult{best.distance, c.words[best.i], c.words[best.j]};
}

Certificate verify_independent_in_gamma(const NonlinearCode& c, const LowWeightSet& S,
                                        int threads) {
    const std::size_t n = c.words.size();

    const WordBitTable in_S(S.words);

    struct Scan {
        std::uint64_t edges = 0;      // pairs whose difference lies in S
        std::uint64_t below5 = 0;     // pairs at Hamming distance < 5
        std::uint64_t mismatch = 0;   // pairs where the two routes disagree
        std::uint64_t pairs = 0;
    };
    Scan total = parallel_block_reduce<Scan>(
        n, threads, 64, Scan{},
        [&](std::size_t lo, std::size_t hi) {
            Scan local;
            for (std::size_t i = lo; i < hi; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    const std::uint32_t diff = c.words[i].bits() ^ c.words[j].bits();
                    const bool edge = in_S.test(diff);
                    const bool close = std::popcount(diff) < 5;
                    local.edges += edge;
                    local.below5 += close;
                    // For codewords of D the two tests must agree: weight-<5
                    // differences inside D are exactly the S words.
                    local.mismatch += (edge != close);
                    ++local.pairs;
                }
            }
            return local;
        },
        [](Scan a, Scan b) {
            return Scan{a.edges + b.edges, a.below5 + b.below5, a.mismatch + b.mismatch,
                        a.pairs + b.pairs};
        });

    Certificate cert;
    cert.claim = "independent-in-gamma";
    cert.pass = total.edges == 0 && total.below5 == 0 && total.mismatch == 0;
    cert.metrics["pairs"] = total.pairs;
    cert.metrics["edges_in_gamma"] = total.edges;
    cert.metrics["pairs_below_distance_5"] = total.below5;
    cert.metrics["route_disagreements"] = total.mismatch;
    return cert;
}

void write_code_file(std::ostream& out, const NonlinearCode& c,
                     const std::optional<DistanceResult>& dist) {
    Json header;
    header["length"] = c.length;
    header["size"] = c.words.size();
    if (dist) {
        header["min_distance"] = dist->distance;
        header["witness"] = Json::array({dist->a.render(), dist->b.render()});
    }
    header["digest"] = c.digest();
    out << "# " << header.dump() << '\n';
    for (const Word& w : c.words) out << w.render() << '\n';
}

NonlinearCode read_code_file(std::istream& in, std::optional<int> length_hint) {
    std::optional<int> length = length_hint;
    std::vector<Word> words;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
            sv.remove_suffix(1);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            // The header comment carries the length when no hint was given.
            if (!length) {
                auto text = sv.substr(1);
                auto parsed = Json::parse(text, nullptr, false);
                if (parsed.is_object() && parsed.contains("length") &&
                    parsed["length"].is_number_integer())
                    length = parsed["length"].get<int>();
            }
            continue;
        }
        if (!length) {
            // A bare support set fixes no length; default to the ambient 19.
            length = sv.front() == '{' ? 19 : static_cast<int>(sv.size());
        }
        try {
            words.push_back(Word::parse(std::string(sv), *length));
        } catch (const std::exception& e) {
            throw std::invalid_argument("code file line " + std::to_string(lineno) + ": " +
                                        e.what());
        }
    }
    if (!length) throw std::invalid_argument("code file: no words found");
    try {
        return NonlinearCode::from_words(*length, std::move(words));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("code file: ") + e.what());
    }
}

}  // namespace k19
