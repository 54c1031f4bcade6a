#pragma once

// Tensor product decomposition by the path model, classical PRV checks and
// PRV witnesses relative to the order <=_sigma.

#include "symmcomb/lspath.hpp"
#include "symmcomb/satake.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symmcomb {

using Decomposition = std::map<Weight, Integer>;

/// Multiplicities of V_nu in V_lambda (x) V_mu: count eta in B_mu with
/// lambda + eta(t) dominant for all t.
Decomposition tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// tensor_decompose with memoized path models; one instance per thread.
class TensorEngine {
 public:
  explicit TensorEngine(const RootSystem& rs) : rs_(&rs) {}
  const PathModel& model(const Weight& mu);
  Decomposition decompose(const Weight& lambda, const Weight& mu);
  Integer multiplicity(const Weight& nu, const Weight& lambda, const Weight& mu);

 private:
  const RootSystem* rs_;
  std::map<Weight, std::unique_ptr<PathModel>> models_;
  std::map<std::pair<Weight, Weight>, Decomposition> products_;
};

struct ClassicalPrv {
  Weight nu;
  bool dominant = false;
  bool verified = false;
  Integer multiplicity = 0;
};

/// nu = tau(lambda) + eps(mu); verified when nu is dominant and V_nu occurs.
ClassicalPrv prv_classical(const RootSystem& rs, const Weight& lambda, const Weight& mu, const WeylElement& tau,
                           const WeylElement& eps);

/// Positive roots of the auxiliary group K: the positive restricted roots,
/// with 2 alpha-tilde dropped whenever alpha-tilde is a root (type B_l in the
/// non-reduced case).
std::vector<Weight> k_positive_roots(const SymmetricSpace& s);

/// Omega_eta: the weights of the irreducible K-module of highest weight eta,
/// by saturation. Sorted by increasing Delta-tilde height of eta - zeta.
std::vector<Weight> omega_set(const SymmetricSpace& s, const Weight& eta);

struct PrvWitness {
  Weight nu, lambda, mu;
  Weight lambda_bar, mu_bar;      // lambda_bar + mu_bar = nu
  Weight lambda_prime, mu_prime;  // dominant representatives
  Integer multiplicity = 0;       // of V_nu in V_lambda' (x) V_mu'
  bool in_omega1 = false, below_lambda = false, below_mu = false, occurs = false;

  bool verified() const { return in_omega1 && below_lambda && below_mu && occurs; }
};

/// Searches lambda_bar in Omega_lambda by decreasing dominance with
/// nu - lambda_bar in Omega_mu; returns the first pair that verifies.
/// Throws InvalidInput naming the failed precondition.
std::optional<PrvWitness> prv_witness(const SymmetricSpace& s, const Weight& nu, const Weight& lambda,
                                      const Weight& mu, TensorEngine& engine);
std::optional<PrvWitness> prv_witness(const SymmetricSpace& s, const Weight& nu, const Weight& lambda,
                                      const Weight& mu);

struct PrvInstance {
  Weight nu, lambda, mu;
  std::optional<PrvWitness> witness;
};

struct SupportReport {
  Weight lambda, mu;
  std::vector<PrvInstance> instances;
  bool pass = false;
};

/// Every dominant nu <=_sigma lambda + mu receives a witness. Rejects
/// exceptional X and lambda, mu outside Pic+(X) with InvalidInput.
SupportReport surjectivity_support_check(const SymmetricSpace& s, const Weight& lambda, const Weight& mu);

struct SweepReport {
  int bound = 0;
  std::vector<PrvInstance> instances;
  std::vector<std::size_t> failures;  // indices into instances
  bool pass() const { return failures.empty(); }
};

/// Omega_1+ elements whose theta-coordinates are all <= bound.
std::vector<Weight> omega1_box(const SymmetricSpace& s, int bound);

/// All triples nu, lambda, mu from omega1_box(bound) with nu <=_sigma
/// lambda + mu, on `jobs` worker threads; output order is independent of jobs.
SweepReport prv_sweep(const SymmetricSpace& s, int bound, int jobs = 1);

}  // namespace symmcomb
