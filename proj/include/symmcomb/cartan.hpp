#pragma once

// Root systems and Weyl groups of finite type, in exact arithmetic.
//
// Conventions: simple roots are indexed 0..n-1 internally (the CLI and the
// config files are 1-based). The Cartan matrix entry (i, j) is
// <alpha_j, alpha_i^vee>, so column j holds alpha_j in fundamental-weight
// coordinates. Weights are stored in the fundamental-weight basis.

#include "symmcomb/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symmcomb {

/// An element of Lambda (x) Q, in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank) {}
  explicit Weight(RatVector coords) : c_(std::move(coords)) {}
  static Weight from_ints(const std::vector<Integer>& coords);

  std::size_t rank() const { return c_.size(); }
  const RatVector& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  bool is_integral() const;
  bool is_dominant() const;
  bool is_zero() const;
  /// Throws std::domain_error when not integral.
  IntVector to_ints() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

  /// "(1,0,-1/2)"
  std::string str() const;

 private:
  RatVector c_;
};

struct CartanDatum {
  IntMatrix cartan;              // (i,j) = <alpha_j, alpha_i^vee>
  std::vector<int> symmetrizer;  // d_i with d_i C_ij = d_j C_ji
  std::string label;             // "B3", "A1xA1" or "custom"

  int rank() const { return static_cast<int>(cartan.size()); }

  /// "A2", "B3", "F4", products joined by 'x' ("A1xA1"). Bourbaki numbering.
  static CartanDatum from_type(std::string_view type);
  /// Explicit matrix; the symmetrizer is derived. Throws InvalidInput.
  static CartanDatum from_matrix(const IntMatrix& cartan);

  /// Throws InvalidInput unless the datum is a Cartan matrix of finite type.
  void validate() const;
};

struct Root {
  std::vector<int> simple;  // expansion in simple roots
  Weight weight;            // fundamental-weight coordinates
  int norm2 = 0;            // (alpha, alpha) under the symmetrized form

  bool positive() const;
};

/// A Weyl group element, canonicalised by its action matrix on simple-root
/// coordinates. The stored word is the lexicographically least reduced word.
class WeylElement {
 public:
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  /// Row-major n x n; column j is w(alpha_j) in simple-root coordinates.
  const std::vector<int>& matrix() const { return matrix_; }
  int entry(int i, int j) const { return matrix_[i * n_ + j]; }
  int rank() const { return n_; }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.matrix_ < b.matrix_; }

  std::string str() const;  // "s1s3" (1-based), "e" for the identity

 private:
  friend class RootSystem;
  int n_ = 0;
  std::vector<int> word_;
  std::vector<int> matrix_;
};

/// Total order on W refining Bruhat order: by length, then by the
/// lexicographically least reduced word.
bool alphabet_less(const WeylElement& a, const WeylElement& b);

using Character = std::map<Weight, Integer>;

class RootSystem {
 public:
  static constexpr std::size_t kDefaultGroupCap = 1'000'000;

  explicit RootSystem(CartanDatum datum);
  /// Uses a precomputed root list (simple-root coordinates), after checking
  /// that it contains the simple roots and is closed under simple reflections.
  RootSystem(CartanDatum datum, std::vector<std::vector<int>> roots);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<std::size_t>& positive_roots() const { return positive_; }
  std::optional<std::size_t> find_root(const std::vector<int>& simple) const;

  Weight fundamental(int i) const;
  Weight simple_root(int i) const;
  Weight rho() const;
  Weight zero() const { return Weight(static_cast<std::size_t>(rank())); }

  RatVector to_simple(const Weight& w) const;
  Weight from_simple(const RatVector& v) const;
  Weight from_simple(const std::vector<int>& v) const;

  /// Invariant form, normalised so that (alpha_i, alpha_i) = 2 d_i.
  Rational form(const Weight& a, const Weight& b) const;
  /// <w, beta^vee> = 2 (w, beta) / (beta, beta) for any nonzero beta.
  Rational pairing(const Weight& w, const Weight& beta) const;
  Rational pairing(const Weight& w, const Root& beta) const;

  Weight reflect(const Weight& w, int i) const;
  Weight reflect(const Weight& w, const Weight& beta) const;

  WeylElement identity() const;
  WeylElement element(const std::vector<int>& word) const;
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;
  Weight apply(const WeylElement& w, const Weight& x) const;
  std::vector<int> apply_simple(const WeylElement& w, const std::vector<int>& simple) const;
  /// Number of positive roots sent to negative roots.
  int inversion_count(const WeylElement& w) const;

  /// All of W by breadth-first search; throws ResourceLimit past `cap`.
  std::vector<WeylElement> weyl_group(std::size_t cap = kDefaultGroupCap) const;

  /// The dominant element of W.eta and some w with w(eta) = result.
  std::pair<Weight, WeylElement> dominant_representative(const Weight& eta) const;
  /// Dominant element of W.eta only (no group element bookkeeping).
  Weight dominant_of(const Weight& eta) const;

  /// Longest element of the parabolic subgroup generated by `subset`.
  WeylElement longest_element(const std::vector<int>& subset) const;

  /// Orbit W.x in breadth-first order from x.
  std::vector<Weight> orbit(const Weight& x) const;

  /// dim V_lambda by the Weyl dimension formula.
  Integer weyl_dim(const Weight& lambda) const;

  /// Dominant weights of V_lambda with multiplicities (Freudenthal).
  Character dominant_character(const Weight& lambda) const;
  /// Full character of V_lambda.
  Character character(const Weight& lambda) const;

  /// Multiplicities of V_nu in V_lambda (x) V_mu by character arithmetic.
  std::map<Weight, Integer> char_decompose_product(const Weight& lambda, const Weight& mu) const;

  /// Sum of simple-root coordinates.
  Rational height(const Weight& w) const;

 private:
  void install_roots(std::vector<std::vector<int>> found);
  void require_dominant_integral(const Weight& w, const char* what) const;
  WeylElement from_matrix(std::vector<int> matrix) const;

  CartanDatum datum_;
  RatMatrix cartan_inv_;
  std::vector<Root> roots_;
  std::vector<std::size_t> positive_;
  std::map<std::vector<int>, std::size_t> root_index_;
};

/// The saturated set generated by `top` under strings along `positive_roots`
/// with the pairing of `rs`: the weight set of the irreducible module of
/// highest weight `top` for the root system spanned by those roots.
std::vector<Weight> saturate(const RootSystem& rs, const Weight& top,
                             std::span<const Weight> positive_roots);

/// Characters as multisets of weights; sums and products.
Character character_product(const Character& a, const Character& b);
Integer character_dimension(const Character& c);

}  // namespace symmcomb
