#include "symmcomb/lattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace symmcomb {

namespace {

// Floor division for possibly negative numerators.
Integer floor_div(Integer a, Integer b)
{
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(IntVector& y, Integer a, const IntVector& x)
{
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

IntLattice::IntLattice(std::size_t dimension, const std::vector<IntVector>& generators)
    : dim_(dimension)
{
  std::vector<IntVector> rows;
  for (const auto& g : generators) {
    if (g.size() != dim_) throw std::invalid_argument("IntLattice: generator has wrong dimension");
    rows.push_back(g);
  }

  std::size_t top = 0;
  for (std::size_t col = 0; col < dim_ && top < rows.size(); ++col) {
    // Euclid on column `col` among rows [top, end).
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 &&
            (best == rows.size() || std::abs(rows[r][col]) < std::abs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        axpy(rows[r], -(rows[r][col] / rows[top][col]), rows[top]);
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    pivots_.push_back(col);
    ++top;
  }
  rows.resize(top);

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t col = pivots_[i];
    for (std::size_t r = 0; r < i; ++r)
      axpy(rows[r], -floor_div(rows[r][col], rows[i][col]), rows[i]);
  }
  basis_ = std::move(rows);
}

bool IntLattice::contains(const IntVector& v) const
{
  if (v.size() != dim_) return false;
  IntVector rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t col = pivots_[i];
    // Entries left of the pivot are already zero.
    if (rest[col] % basis_[i][col] != 0) return false;
    axpy(rest, -(rest[col] / basis_[i][col]), basis_[i]);
  }
  for (Integer x : rest)
    if (x != 0) return false;
  return true;
}

bool IntLattice::contains(const RatVector& v) const
{
  IntVector iv;
  for (const auto& q : v) {
    if (!is_integral(q)) return false;
    iv.push_back(q.numerator());
  }
  return contains(iv);
}

}  // namespace symmcomb
