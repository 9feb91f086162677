#include "k19/kissing.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "k19/parallel.hpp"

namespace k19 {

SignVector v_of(const Word& c) {
    if (c.length() != kKissingDim)
        throw std::invalid_argument("v_of: word length must be 19");
    SignVector v;
    v.source = c;
    for (int i = 0; i < kKissingDim; ++i)
        v.signs[i] = c.test(i + 1) ? -1 : 1;
    return v;
}

Rational pair_cosine(const SignVector& a, const SignVector& b) {
    int dot = 0;
    for (int i = 0; i < kKissingDim; ++i) dot += int(a.signs[i]) * int(b.signs[i]);
    // <v(a), v(b)> = (8/19) * dot, and |v|^2 = 8, so the cosine is dot/19.
    return Rational(dot, kKissingDim);
}

Certificate verify_code_vectors(const NonlinearCode& A, int threads) {
    Certificate cert;
    cert.claim = "code-vectors";
    if (A.length != kKissingDim) {
        cert.pass = false;
        cert.witness = Json{{"error", "code length is not 19"}};
        return cert;
    }
    std::vector<SignVector> vs;
    vs.reserve(A.words.size());
    for (const Word& w : A.words) vs.push_back(v_of(w));
    const std::size_t n = vs.size();

    struct Scan {
        // cosines are multiples of 1/19; track the numerator.
        int max_num = -kKissingDim - 1;
        std::size_t max_i = 0, max_j = 0;
        std::uint64_t over_half = 0;
        std::uint64_t mismatch = 0;
        std::uint64_t pairs = 0;
    };
    Scan total = parallel_block_reduce<Scan>(
        n, threads, 64, Scan{},
        [&](std::size_t lo, std::size_t hi) {
            Scan local;
            for (std::size_t i = lo; i < hi; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    int dot = 0;
                    for (int k = 0; k < kKissingDim; ++k)
                        dot += int(vs[i].signs[k]) * int(vs[j].signs[k]);
                    const int d = distance(A.words[i], A.words[j]);
                    // The sign route and the popcount route must agree.
                    local.mismatch += (dot != kKissingDim - 2 * d);
                    local.over_half += (2 * dot > kKissingDim);
                    if (dot > local.max_num) {
                        local.max_num = dot;
                        local.max_i = i;
                        local.max_j = j;
                    }
                    ++local.pairs;
                }
            }
            return local;
        },
        [](Scan a, Scan b) {
            Scan out = a;
            out.over_half += b.over_half;
            out.mismatch += b.mismatch;
            out.pairs += b.pairs;
            // Blocks are folded in index order, so preferring the earlier
            // block on ties keeps the witness deterministic.
            if (b.max_num > out.max_num) {
                out.max_num = b.max_num;
                out.max_i = b.max_i;
                out.max_j = b.max_j;
            }
            return out;
        });

    cert.pass = total.over_half == 0 && total.mismatch == 0;
    cert.metrics["vectors"] = n;
    cert.metrics["pairs"] = total.pairs;
    cert.metrics["pairs_above_half"] = total.over_half;
    cert.metrics["route_disagreements"] = total.mismatch;
    if (n >= 2) {
        cert.metrics["max_cosine"] =
            rational_to_string(Rational(total.max_num, kKissingDim));
        cert.witness = Json{{"max_cosine_pair", Json::array({A.words[total.max_i].render(),
                                                             A.words[total.max_j].render()})}};
    }
    return cert;
}

namespace {

Rational parse_rational(const std::string& token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(BigInt(token));
    const BigInt num(token.substr(0, slash));
    const BigInt den(token.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

}  // namespace

std::vector<RationalPoint> ingest_points(std::istream& in) {
    std::vector<RationalPoint> points;
    std::string line;
    std::size_t lineno = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        RationalPoint p;
        std::string token;
        while (ss >> token) {
            try {
                p.coords.push_back(parse_rational(token));
            } catch (const std::exception&) {
                throw std::invalid_argument("points line " + std::to_string(lineno) +
                                            ": bad token '" + token + "'");
            }
        }
        if (p.coords.empty()) continue;
        if (dim == 0)
            dim = p.coords.size();
        else if (p.coords.size() != dim)
            throw std::invalid_argument("points line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(dim) + " coordinates, got " +
                                        std::to_string(p.coords.size()));
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<RationalPoint> ingest_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open points file: " + path);
    return ingest_points(in);
}

namespace {

// Clearing denominators turns every check into integer arithmetic. When the
// scaled coordinates fit comfortably in 64 bits the inner products run on
// native integers; otherwise everything falls back to cpp_int.
struct ScaledPoints {
    std::vector<std::vector<BigInt>> big;
    std::vector<std::vector<std::int64_t>> narrow;  // empty when out of range
};

ScaledPoints clear_denominators(const std::vector<RationalPoint>& points) {
    BigInt lcm = 1;
    for (const auto& p : points)
        for (const auto& c : p.coords)
            lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));

    ScaledPoints sp;
    sp.big.reserve(points.size());
    // With |coord| <= 2^24 and <= 2^12 coordinates, any dot product stays
    // below 2^61, so doubling it cannot overflow int64.
    bool fits = points.empty() || points[0].coords.size() <= (1u << 12);
    const BigInt limit = BigInt(1) << 24;
    for (const auto& p : points) {
        std::vector<BigInt> row;
        row.reserve(p.coords.size());
        for (const auto& c : p.coords) {
            BigInt v = boost::multiprecision::numerator(c) *
                       (lcm / boost::multiprecision::denominator(c));
            if (v > limit || v < -limit) fits = false;
            row.push_back(std::move(v));
        }
        sp.big.push_back(std::move(row));
    }
    if (fits) {
        sp.narrow.reserve(sp.big.size());
        for (const auto& row : sp.big) {
            std::vector<std::int64_t> nrow;
            nrow.reserve(row.size());
            for (const auto& v : row) nrow.push_back(static_cast<std::int64_t>(v));
            sp.narrow.push_back(std::move(nrow));
        }
    }
    return sp;
}

}  // namespace

Certificate verify_configuration(const std::vector<RationalPoint>& points, int threads) {
    Certificate cert;
    cert.claim = "point-configuration";
    const std::size_t n = points.size();
    cert.metrics["points"] = n;
    if (n == 0) {
        cert.pass = true;
        cert.metrics["pairs"] = 0;
        return cert;
    }
    const std::size_t dim = points[0].coords.size();
    cert.metrics["dimension"] = dim;

    ScaledPoints sp = clear_denominators(points);

    // Norm agreement is a linear pass; do it exactly, always.
    std::vector<BigInt> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt acc = 0;
        for (const BigInt& v : sp.big[i]) acc += v * v;
        norms[i] = acc;
    }
    const BigInt norm0 = norms[0];
    std::size_t bad_norm = n;
    for (std::size_t i = 1; i < n; ++i)
        if (norms[i] != norm0) {
            bad_norm = i;
            break;
        }
    if (norm0 == 0) {
        cert.pass = false;
        cert.witness = Json{{"error", "zero vector in configuration"}};
        return cert;
    }
    if (bad_norm < n) {
        cert.pass = false;
        cert.witness = Json{{"unequal_norm_indices", Json::array({0, bad_norm})}};
        return cert;
    }

    struct Scan {
        BigInt max_dot;
        std::size_t max_i = 0, max_j = 0;
        std::uint64_t violations = 0;
        std::uint64_t pairs = 0;
        std::size_t first_bad_i = 0, first_bad_j = 0;
        bool has_bad = false;
    };
    const bool narrow = !sp.narrow.empty();
    const std::int64_t half_bound_num = narrow ? static_cast<std::int64_t>(norm0) : 0;

    auto map_block = [&](std::size_t lo, std::size_t hi) {
        Scan local;
        local.max_dot = -norm0 - 1;
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                BigInt dot;
                if (narrow) {
                    std::int64_t acc = 0;
                    const auto& a = sp.narrow[i];
                    const auto& b = sp.narrow[j];
                    for (std::size_t k = 0; k < dim; ++k) acc += a[k] * b[k];
                    dot = acc;
                    if (2 * acc > half_bound_num) {
                        if (!local.has_bad) {
                            local.has_bad = true;
                            local.first_bad_i = i;
                            local.first_bad_j = j;
                        }
                        ++local.violations;
                    }
                } else {
                    BigInt acc = 0;
                    const auto& a = sp.big[i];
                    const auto& b = sp.big[j];
                    for (std::size_t k = 0; k < dim; ++k) acc += a[k] * b[k];
                    dot = acc;
                    if (2 * acc > norm0) {
                        if (!local.has_bad) {
                            local.has_bad = true;
                            local.first_bad_i = i;
                            local.first_bad_j = j;
                        }
                        ++local.violations;
                    }
                }
                if (dot > local.max_dot) {
                    local.max_dot = dot;
                    local.max_i = i;
                    local.max_j = j;
                }
                ++local.pairs;
            }
        }
        return local;
    };
    auto reduce = [](Scan a, Scan b) {
        Scan out = std::move(a);
        if (b.max_dot > out.max_dot) {
            out.max_dot = b.max_dot;
            out.max_i = b.max_i;
            out.max_j = b.max_j;
        }
        out.violations += b.violations;
        out.pairs += b.pairs;
        if (!out.has_bad && b.has_bad) {
            out.has_bad = true;
            out.first_bad_i = b.first_bad_i;
            out.first_bad_j = b.first_bad_j;
        }
        return out;
    };
    Scan init;
    init.max_dot = -norm0 - 1;
    Scan total = parallel_block_reduce<Scan>(n, threads, 64, init, map_block, reduce);

    cert.pass = total.violations == 0;
    cert.metrics["pairs"] = total.pairs;
    cert.metrics["pairs_above_half"] = total.violations;
    cert.metrics["arithmetic"] = narrow ? "int64" : "bigint";
    if (n >= 2) {
        cert.metrics["max_cosine"] =
            rational_to_string(Rational(total.max_dot, norm0));
        Json witness;
        witness["max_cosine_pair"] = Json::array({total.max_i, total.max_j});
        if (total.has_bad)
            witness["first_violation"] = Json::array({total.first_bad_i, total.first_bad_j});
        cert.witness = witness;
    }
    return cert;
}

std::vector<RationalPoint> sign_vector_points(const NonlinearCode& A) {
    std::vector<RationalPoint> points;
    points.reserve(A.words.size());
    for (const Word& w : A.words) {
        SignVector v = v_of(w);
        RationalPoint p;
        p.coords.reserve(kKissingDim);
        for (int i = 0; i < kKissingDim; ++i) p.coords.emplace_back(int(v.signs[i]));
        points.push_back(std::move(p));
    }
    return points;
}

void emit_vectors(std::ostream& out, const NonlinearCode& A) {
    out << "# sign vectors of a length-19 binary code; one point per line\n";
    out << "# coordinates are the +-1 signs; the physical points carry a common\n";
    out << "# scale factor sqrt(8/19), which cancels in all angle comparisons\n";
    out << "# source-digest: " << A.digest() << "\n";
    for (const Word& w : A.words) {
        SignVector v = v_of(w);
        for (int i = 0; i < kKissingDim; ++i) {
            if (i) out << ' ';
            out << int(v.signs[i]);
        }
        out << '\n';
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream ss;
    ss << r;
    return ss.str();
}

}  // namespace k19
