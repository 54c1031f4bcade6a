#pragma once

// Involutions of a root system given by a Satake diagram, the restricted
// root system, spherical weights and the Picard lattice of the complete
// symmetric variety.

#include "symmcomb/cartan.hpp"
#include "symmcomb/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symmcomb {

struct SatakeDiagram {
  CartanDatum datum;
  std::vector<int> black;                  // Delta_0, 0-based
  std::vector<std::pair<int, int>> arrows; // pairs swapped by sigma-bar, 0-based
  std::string name;                        // preset name, if any

  /// sigma-bar on all indices: identity on black nodes and unpaired white nodes.
  std::vector<int> bar() const;
  bool is_black(int i) const;
  /// Throws InvalidInput on overlapping arrows, arrows touching black nodes
  /// or indices out of range.
  void check_structure() const;
};

/// Named diagrams: A1-split, A2-split, B2-split, A2-swap, B3-l1, B4-l1, F4,
/// A1xA1-swap.
std::vector<std::string> preset_names();
/// Throws InvalidInput for unknown names.
SatakeDiagram preset(const std::string& name);

struct InvolutionTable {
  IntMatrix on_simple;                 // column j = sigma(alpha_j) in simple-root coordinates
  IntMatrix on_weights;                // column j = sigma(omega_j) in fundamental coordinates
  std::vector<int> bar;                // sigma-bar on indices
  std::vector<int> representatives;    // alpha_1..alpha_l (simple indices, ascending)
  std::vector<int> exceptional;        // exceptional simple roots
  std::vector<int> c_values;           // c_alpha = 2 - <sigma(alpha), alpha^vee> per simple root
  std::vector<std::vector<int>> beta;  // beta_alpha for white alpha (black coefficients), empty for black

  int rank() const { return static_cast<int>(representatives.size()); }
};

/// sigma = -w_{Delta_0} sigma-bar on white roots, identity on black roots.
/// Validates every table invariant; throws InvalidInput("not a valid Satake
/// diagram: ...") on failure.
InvolutionTable build_involution(const RootSystem& rs, const SatakeDiagram& diagram);

Weight apply_sigma(const InvolutionTable& t, const Weight& w);
std::vector<int> apply_sigma_simple(const InvolutionTable& t, const std::vector<int>& simple);

struct RestrictedRoot {
  Weight value;           // alpha - sigma(alpha) in fundamental coordinates
  std::vector<Integer> in_base;  // coordinates in the base Delta-tilde
  int multiplicity = 0;   // number of roots of Phi restricting to it
};

struct RestrictedData {
  std::vector<RestrictedRoot> roots;  // nonzero restricted roots, positive first
  std::vector<Weight> base;           // alpha-tilde_1..alpha-tilde_l
  std::vector<bool> doubled;          // 2 alpha-tilde_i is a restricted root
  bool reduced = true;
  IntMatrix cartan;                   // <alpha-tilde_j, alpha-tilde_i^vee>
  std::string type;                   // "A2", "BC1", "A1xBC1", ...

  int rank() const { return static_cast<int>(base.size()); }
  std::vector<Weight> positive_roots() const;
};

RestrictedData restricted_system(const RootSystem& rs, const InvolutionTable& t);

/// Type string for a Cartan matrix ("A2", "B3", "F4", components joined by
/// 'x'); `doubled` marks simple roots whose double is a root (BC components).
std::string classify_cartan(const IntMatrix& cartan, const std::vector<bool>& doubled = {});

/// Restricted Weyl group orbit of eta (in the -1 eigenspace of sigma).
std::vector<Weight> restricted_orbit(const RootSystem& rs, const RestrictedData& r, const Weight& eta);

struct SphericalLattice {
  std::vector<Weight> generators;      // omega-tilde_1..omega-tilde_l
  std::vector<int> c;                  // c_i in {1,2}
  std::vector<Weight> pic_generators;  // omega-tilde's then exceptional omega_j
  IntLattice pic;
  IntLattice omega1;
  std::vector<Weight> theta;           // theta-basis of Pic(X)
  std::vector<std::string> theta_forms;  // "w2", "2w1", "w1+w2" (1-based)

  int theta_rank() const { return static_cast<int>(theta.size()); }
};

struct SymmetricSpace;

/// omega-tilde_i, Pic(X), and a theta-basis certified over dominant lattice
/// points with fundamental coordinates <= verify_bound.
SphericalLattice spherical_lattice(const RootSystem& rs, const InvolutionTable& t,
                                   const RestrictedData& r, int verify_bound = 4);

/// Bundle of everything derived from one diagram.
struct SymmetricSpace {
  SatakeDiagram diagram;
  RootSystem roots;
  InvolutionTable involution;
  RestrictedData restricted;
  SphericalLattice lattice;

  static SymmetricSpace build(const SatakeDiagram& diagram, int verify_bound = 4);
  /// Same, reusing an already constructed root system for diagram.datum.
  static SymmetricSpace build(const SatakeDiagram& diagram, RootSystem roots, int verify_bound = 4);
  bool exceptional() const { return !involution.exceptional.empty(); }
};

bool is_special(const SymmetricSpace& s, const Weight& mu);
/// Membership in Omega_1: special and integral on every restricted coroot.
bool in_omega1(const SymmetricSpace& s, const Weight& mu);
/// Dominant, special and satisfying the integrality test on the base
/// Delta-tilde (with (2 alpha-tilde_i)^vee when 2 alpha-tilde_i is a root).
bool is_spherical(const SymmetricSpace& s, const Weight& mu);
bool in_pic(const SymmetricSpace& s, const Weight& mu);

/// Coordinates of lambda - mu in Delta-tilde when it lies in their Z-span.
std::optional<std::vector<Integer>> sigma_difference(const SymmetricSpace& s, const Weight& mu,
                                                     const Weight& lambda);
/// mu <=_sigma lambda: lambda - mu is an N-combination of Delta-tilde.
bool leq_sigma(const SymmetricSpace& s, const Weight& mu, const Weight& lambda);

/// Coordinates of a Pic(X) element in the theta-basis; throws InvalidInput
/// when mu is not in Pic(X).
std::vector<Integer> theta_coordinates(const SymmetricSpace& s, const Weight& mu);
Weight from_theta(const SymmetricSpace& s, const std::vector<Integer>& coords);

/// Dominant weights lambda - sum n_i alpha-tilde_i (n_i >= 0, n_i = 0 for i in
/// `frozen`), each with its n, sorted by n.
std::vector<std::pair<std::vector<Integer>, Weight>> dominant_below(
    const SymmetricSpace& s, const Weight& lambda, const std::vector<int>& frozen = {});

struct SectionDim {
  Integer total = 0;
  std::vector<std::pair<Weight, Integer>> terms;  // (mu, dim V_mu)
};

/// dim H^0(X, L_lambda) as the sum of dim V_mu over dominant mu <=_sigma lambda.
SectionDim section_dim(const SymmetricSpace& s, const Weight& lambda);

}  // namespace symmcomb
