#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "k19/certificate.hpp"
#include "k19/lift.hpp"
#include "k19/word.hpp"

namespace k19 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

constexpr int kKissingDim = 19;

/// ±1 vector attached to a length-19 codeword. The irrational scale
/// sqrt(8/19) is carried symbolically; it cancels in every comparison, so all
/// verification stays in integer arithmetic.
struct SignVector {
    std::array<std::int8_t, kKissingDim> signs{};
    Word source;
};

/// signs[i] = (-1)^{c_{i+1}}. Throws unless c has length 19.
SignVector v_of(const Word& c);

/// <v(a), v(b)> / 8 = (19 - 2d) / 19 where d is the Hamming distance of the
/// source codewords.
Rational pair_cosine(const SignVector& a, const SignVector& b);

/// Pass iff every pairwise cosine is <= 1/2, cross-checked against the
/// popcount route (min distance >= 5).
Certificate verify_code_vectors(const NonlinearCode& A, int threads = 1);

/// Exact point: coordinates as arbitrary-precision rationals in lowest terms.
struct RationalPoint {
    std::vector<Rational> coords;
};

/// Point file format: one point per line, whitespace-separated `p` or `p/q`
/// tokens; `#` begins a comment line; blank lines ignored. All points must
/// share one dimension. Throws with the offending line number on bad input.
std::vector<RationalPoint> ingest_points(std::istream& in);
std::vector<RationalPoint> ingest_points_file(const std::string& path);

/// Pass iff all squared norms are exactly equal and every pairwise inner
/// product is at most half the common squared norm. Reports the count, the
/// maximum cosine, and the first violating pair on failure.
Certificate verify_configuration(const std::vector<RationalPoint>& points, int threads = 1);

/// Write the code's sign vectors in point-file format, with header comments
/// recording the symbolic scale and the source code digest.
void emit_vectors(std::ostream& out, const NonlinearCode& A);

std::vector<RationalPoint> sign_vector_points(const NonlinearCode& A);

std::string rational_to_string(const Rational& r);

}  // namespace k19
