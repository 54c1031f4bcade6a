#include "symmcomb/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace symmcomb {

Integer to_integer(const Rational& q)
{
  if (q.denominator() != 1)
    throw std::domain_error("expected an integer, got " + to_string(q));
  return q.numerator();
}

std::string to_string(const Rational& q)
{
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(std::string_view text)
{
  auto parse_int = [&](std::string_view s) -> Integer {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t used = 0;
    Integer v = std::stoll(std::string(s), &used);
    if (used != s.size())
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Integer gcd(Integer a, Integer b) { return std::gcd(a, b); }
Integer lcm(Integer a, Integer b) { return std::lcm(a, b); }

RatMatrix to_rational(const IntMatrix& m)
{
  RatMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int x : m[i]) out[i].emplace_back(x);
  return out;
}

RatVector matvec(const RatMatrix& m, const RatVector& v)
{
  RatVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b)
{
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix out(n, RatVector(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Rational determinant(RatMatrix m)
{
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m)
{
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::optional<RatVector> solve_in_span(const std::vector<RatVector>& columns,
                                       const RatVector& target)
{
  const std::size_t k = columns.size();
  const std::size_t n = target.size();
  // Augmented system, rows = coordinates.
  RatMatrix a(n, RatVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = columns[j][i];
    a[i][k] = target[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("solve_in_span: dependent columns");
    std::swap(a[p], a[row]);
    Rational piv = a[row][c];
    for (auto& x : a[row]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (pivot_col.size() != k) throw std::invalid_argument("solve_in_span: dependent columns");
  for (std::size_t r = row; r < n; ++r)
    if (a[r][k] != 0) return std::nullopt;
  RatVector x(k);
  for (std::size_t r = 0; r < k; ++r) x[pivot_col[r]] = a[r][k];
  return x;
}

}  // namespace symmcomb
