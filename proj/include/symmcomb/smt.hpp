#pragma once

// Standard monomials for the ring of sections of a complete symmetric
// variety: boundary exponents times LS paths of theta-shapes.

#include "symmcomb/lspath.hpp"
#include "symmcomb/satake.hpp"

#include <string>
#include <vector>

namespace symmcomb {

struct Monomial {
  std::vector<Integer> n;       // vanishing order, exponents of s_1..s_l
  std::vector<int> shapes;      // theta indices h_1 <= ... <= h_u
  std::vector<LSPath> factors;  // factors[j] has shape theta_{shapes[j]}

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& x, const Monomial& y);
};

enum class Order { less, greater, equal, incomparable };
std::string to_string(Order o);

struct DimensionTerm {
  std::vector<Integer> n;
  Weight mu;
  Integer weyl_dim = 0;
  Integer monomials = 0;  // standard monomials with vanishing order n
};

struct DimensionReport {
  Weight lambda;
  std::vector<int> frozen;  // the set I
  Integer count = 0;        // |M_{lambda,I}|
  Integer expected = 0;     // sum of weyl_dim(mu)
  std::vector<DimensionTerm> terms;
  bool pass = false;

  /// "6 = 5+1 PASS"
  std::string summary() const;
};

/// Standard monomial machinery for one symmetric space. Holds the path
/// models of the theta-shapes; not safe for concurrent mutation.
class StandardMonomials {
 public:
  explicit StandardMonomials(const SymmetricSpace& s);

  const SymmetricSpace& space() const { return *s_; }
  const PathModel& model(int theta) const { return models_[theta]; }

  /// Realized concatenation pi_1 * ... * pi_u.
  Path concatenation(const std::vector<int>& shapes, const std::vector<LSPath>& factors) const;
  /// pi_{theta_{h_1}} * ... * pi_{theta_{h_u}}.
  Path head(const std::vector<int>& shapes) const;

  /// Raise fully and compare with the head.
  bool is_standard(const std::vector<int>& shapes, const std::vector<LSPath>& factors) const;

  /// Standard factor lists for the flag shape with the given theta-coordinates.
  std::vector<std::vector<LSPath>> standard_factors(const std::vector<Integer>& theta_coords) const;

  /// All standard monomials of shape lambda with n_i = 0 for i in `frozen`.
  /// Throws InvalidInput when lambda is not in Pic(X).
  std::vector<Monomial> enumerate(const Weight& lambda, const std::vector<int>& frozen = {}) const;

  /// |M_{lambda,I}| against the sum of dim V_mu over admissible mu.
  DimensionReport verify_dimension(const Weight& lambda, const std::vector<int>& frozen = {}) const;

  /// Shape lambda(x) = sum n_i alpha-tilde_i + sum theta_{h_j}.
  Weight shape(const Monomial& x) const;
  /// Flag shape mu(x) = sum theta_{h_j}.
  Weight flag_shape(const Monomial& x) const;

  /// Word blocks w(pi_1), ..., w(pi_u) as Weyl group elements.
  std::vector<std::vector<WeylElement>> word_blocks(const Monomial& x) const;

  /// Two-stage monomial order. Throws InvalidInput on a shape mismatch.
  Order compare(const Monomial& x, const Monomial& y) const;

 private:
  const SymmetricSpace* s_;
  std::vector<PathModel> models_;
};

}  // namespace symmcomb
