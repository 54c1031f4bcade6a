#pragma once

#include "symmcomb/rational.hpp"

#include <vector>

namespace symmcomb {

/// A sublattice of Z^n, held as the rows of its Hermite normal form.
///
/// Two lattices are equal iff their HNF bases are equal, so operator== is
/// the lattice equality test.
class IntLattice {
 public:
  IntLattice() = default;
  IntLattice(std::size_t dimension, const std::vector<IntVector>& generators);

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  bool contains(const RatVector& v) const;

  friend bool operator==(const IntLattice&, const IntLattice&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace symmcomb
