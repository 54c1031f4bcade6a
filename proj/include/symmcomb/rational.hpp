#pragma once

// Exact rational scalars, vectors and the small amount of dense linear
// algebra the rest of the library needs.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// boost 1.74 mixed rational/integer comparisons recurse forever under C++20
// rewritten operators. These exact overloads take precedence.
namespace boost {
#define SYMMCOMB_RATIONAL_CMP(OP)                                                                   \
  inline bool operator OP(const rational<std::int64_t>& a, int b) { return a OP rational<std::int64_t>(b); } \
  inline bool operator OP(int a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) OP b; } \
  inline bool operator OP(const rational<std::int64_t>& a, std::int64_t b) { return a OP rational<std::int64_t>(b); } \
  inline bool operator OP(std::int64_t a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) OP b; }
SYMMCOMB_RATIONAL_CMP(==)
SYMMCOMB_RATIONAL_CMP(!=)
SYMMCOMB_RATIONAL_CMP(<)
SYMMCOMB_RATIONAL_CMP(>)
SYMMCOMB_RATIONAL_CMP(<=)
SYMMCOMB_RATIONAL_CMP(>=)
#undef SYMMCOMB_RATIONAL_CMP
}  // namespace boost

namespace symmcomb {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<std::vector<int>>;

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

/// Throws std::domain_error when q is not an integer.
Integer to_integer(const Rational& q);

/// "3", "-1/2".
std::string to_string(const Rational& q);

/// Accepts "3", "-4", "1/2".
Rational parse_rational(std::string_view text);

Integer gcd(Integer a, Integer b);
Integer lcm(Integer a, Integer b);

RatMatrix to_rational(const IntMatrix& m);
RatVector matvec(const RatMatrix& m, const RatVector& v);
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

Rational determinant(RatMatrix m);

/// Inverse of a square matrix; throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);

/// Solves sum_j x_j * columns[j] = target exactly.
///
/// The columns must be linearly independent. Returns nullopt when the
/// target is not in their span.
std::optional<RatVector> solve_in_span(const std::vector<RatVector>& columns,
                                       const RatVector& target);

}  // namespace symmcomb
