#include "symmcomb/prv.hpp"

#include "symmcomb/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

namespace symmcomb {

namespace {

void require_dominant(const RootSystem& rs, const Weight& w, const char* what)
{
  if (static_cast<int>(w.rank()) != rs.rank() || !w.is_integral() || !w.is_dominant())
    throw InvalidInput(std::string(what) + ": " + w.str() + " is not a dominant integral weight");
}

Decomposition decompose_with(const Weight& lambda, const PathModel& model)
{
  Decomposition out;
  for (const Path& eta : model.realized()) {
    bool dominant = true;
    for (const Weight& b : eta.breakpoints())
      if (!(lambda + b).is_dominant()) {
        dominant = false;
        break;
      }
    if (dominant) ++out[lambda + eta.endpoint()];
  }
  return out;
}

Integer delta_height(const SymmetricSpace& s, const Weight& lower, const Weight& upper)
{
  auto d = sigma_difference(s, lower, upper);
  if (!d) throw VerificationFailure("weight " + lower.str() + " is not below " + upper.str() + " in Delta-tilde");
  Integer h = 0;
  for (Integer x : *d) h += x;
  return h;
}

}  // namespace

Decomposition tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu)
{
  require_dominant(rs, lambda, "tensor_decompose");
  require_dominant(rs, mu, "tensor_decompose");
  return decompose_with(lambda, PathModel(rs, mu));
}

const PathModel& TensorEngine::model(const Weight& mu)
{
  auto& slot = models_[mu];
  if (!slot) slot = std::make_unique<PathModel>(*rs_, mu);
  return *slot;
}

Decomposition TensorEngine::decompose(const Weight& lambda, const Weight& mu)
{
  auto key = std::make_pair(lambda, mu);
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;
  require_dominant(*rs_, lambda, "tensor_decompose");
  require_dominant(*rs_, mu, "tensor_decompose");
  return products_[key] = decompose_with(lambda, model(mu));
}

Integer TensorEngine::multiplicity(const Weight& nu, const Weight& lambda, const Weight& mu)
{
  Decomposition d = decompose(lambda, mu);
  auto it = d.find(nu);
  return it == d.end() ? 0 : it->second;
}

ClassicalPrv prv_classical(const RootSystem& rs, const Weight& lambda, const Weight& mu, const WeylElement& tau,
                           const WeylElement& eps)
{
  require_dominant(rs, lambda, "prv_classical");
  require_dominant(rs, mu, "prv_classical");
  ClassicalPrv r;
  r.nu = rs.apply(tau, lambda) + rs.apply(eps, mu);
  r.dominant = r.nu.is_dominant();
  if (!r.dominant) return r;
  Decomposition d = tensor_decompose(rs, lambda, mu);
  auto it = d.find(r.nu);
  r.multiplicity = it == d.end() ? 0 : it->second;
  r.verified = r.multiplicity >= 1;
  return r;
}

std::vector<Weight> k_positive_roots(const SymmetricSpace& s)
{
  std::set<std::vector<Integer>> present;
  for (const auto& r : s.restricted.roots) present.insert(r.in_base);
  std::vector<Weight> out;
  for (const auto& r : s.restricted.roots) {
    if (!std::all_of(r.in_base.begin(), r.in_base.end(), [](Integer x) { return x >= 0; })) continue;
    bool even = std::all_of(r.in_base.begin(), r.in_base.end(), [](Integer x) { return x % 2 == 0; });
    if (even) {
      auto half = r.in_base;
      for (auto& x : half) x /= 2;
      if (present.count(half)) continue;
    }
    out.push_back(r.value);
  }
  return out;
}

std::vector<Weight> omega_set(const SymmetricSpace& s, const Weight& eta)
{
  std::vector<Weight> roots = k_positive_roots(s);
  std::vector<Weight> out = saturate(s.roots, eta, roots);
  std::vector<std::pair<Integer, Weight>> keyed;
  for (auto& z : out) keyed.emplace_back(delta_height(s, z, eta), z);
  std::sort(keyed.begin(), keyed.end());
  out.clear();
  for (auto& [h, z] : keyed) out.push_back(z);
  return out;
}

std::optional<PrvWitness> prv_witness(const SymmetricSpace& s, const Weight& nu, const Weight& lambda,
                                      const Weight& mu, TensorEngine& engine)
{
  auto in_plus = [&](const Weight& w) { return w.is_dominant() && in_omega1(s, w); };
  if (!in_plus(nu)) throw InvalidInput("prv_witness: nu = " + nu.str() + " is not in Omega_1+");
  if (!in_plus(lambda)) throw InvalidInput("prv_witness: lambda = " + lambda.str() + " is not in Omega_1+");
  if (!in_plus(mu)) throw InvalidInput("prv_witness: mu = " + mu.str() + " is not in Omega_1+");
  if (!leq_sigma(s, nu, lambda + mu))
    throw InvalidInput("prv_witness: nu = " + nu.str() + " is not <=_sigma lambda + mu");

  std::vector<Weight> om_mu = omega_set(s, mu);
  std::set<Weight> in_mu(om_mu.begin(), om_mu.end());
  for (const Weight& lb : omega_set(s, lambda)) {
    Weight mb = nu - lb;
    if (!in_mu.count(mb)) continue;
    PrvWitness w{nu, lambda, mu, lb, mb, s.roots.dominant_of(lb), s.roots.dominant_of(mb)};
    w.below_lambda = leq_sigma(s, w.lambda_prime, lambda);
    w.below_mu = leq_sigma(s, w.mu_prime, mu);
    w.in_omega1 = in_omega1(s, w.lambda_prime) && in_omega1(s, w.mu_prime);
    // A dominant weight below an element of Omega_1+ must itself lie in Omega_1+.
    if ((w.below_lambda && !in_omega1(s, w.lambda_prime)) || (w.below_mu && !in_omega1(s, w.mu_prime)))
      throw VerificationFailure("dominant weight <=_sigma an element of Omega_1+ lies outside Omega_1");
    if (w.in_omega1 && w.below_lambda && w.below_mu) {
      w.multiplicity = engine.multiplicity(nu, w.lambda_prime, w.mu_prime);
      w.occurs = w.multiplicity >= 1;
    }
    if (w.verified()) return w;
  }
  return std::nullopt;
}

std::optional<PrvWitness> prv_witness(const SymmetricSpace& s, const Weight& nu, const Weight& lambda,
                                      const Weight& mu)
{
  TensorEngine engine(s.roots);
  return prv_witness(s, nu, lambda, mu, engine);
}

SupportReport surjectivity_support_check(const SymmetricSpace& s, const Weight& lambda, const Weight& mu)
{
  if (s.exceptional())
    throw InvalidInput("surjectivity_support_check: X has exceptional roots, so Pic(X) is larger than the "
                       "spherical lattice and the check does not apply");
  for (const Weight* w : {&lambda, &mu})
    if (!in_pic(s, *w) || !w->is_dominant())
      throw InvalidInput("surjectivity_support_check: " + w->str() + " is not in Pic+(X)");
  SupportReport r{lambda, mu, {}, true};
  TensorEngine engine(s.roots);
  for (const auto& [n, nu] : dominant_below(s, lambda + mu)) {
    PrvInstance inst{nu, lambda, mu, prv_witness(s, nu, lambda, mu, engine)};
    if (!inst.witness) r.pass = false;
    r.instances.push_back(std::move(inst));
  }
  return r;
}

std::vector<Weight> omega1_box(const SymmetricSpace& s, int bound)
{
  const int r = s.lattice.theta_rank();
  std::vector<Weight> out;
  std::vector<Integer> c(r, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == r) {
      Weight w = from_theta(s, c);
      if (in_omega1(s, w)) out.push_back(w);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      c[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

SweepReport prv_sweep(const SymmetricSpace& s, int bound, int jobs)
{
  SweepReport rep;
  rep.bound = bound;
  std::vector<Weight> box = omega1_box(s, bound);
  for (const Weight& l : box)
    for (const Weight& m : box)
      for (const Weight& n : box)
        if (leq_sigma(s, n, l + m)) rep.instances.push_back(PrvInstance{n, l, m, std::nullopt});

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&]() {
    try {
      TensorEngine engine(s.roots);
      for (std::size_t k = next++; k < rep.instances.size(); k = next++) {
        auto& inst = rep.instances[k];
        inst.witness = prv_witness(s, inst.nu, inst.lambda, inst.mu, engine);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next = rep.instances.size();
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  for (std::size_t k = 0; k < rep.instances.size(); ++k)
    if (!rep.instances[k].witness) rep.failures.push_back(k);
  return rep;
}

}  // namespace symmcomb
