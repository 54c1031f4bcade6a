#include "symmcomb/suite.hpp"

#include "symmcomb/lspath.hpp"
#include "symmcomb/prv.hpp"
#include "symmcomb/smt.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace symmcomb {

namespace {

// Calls f on every integer vector in [lo, hi]^n.
void for_box(int n, int lo, int hi, const std::function<void(const std::vector<Integer>&)>& f)
{
  std::vector<Integer> x(n, lo);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      f(x);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      x[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

std::vector<std::vector<int>> subsets(int l)
{
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << l); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < l; ++i)
      if (mask >> i & 1) I.push_back(i);
    out.push_back(I);
  }
  return out;
}

CheckResult involution_check(const SymmetricSpace& s)
{
  const auto& rs = s.roots;
  const auto& t = s.involution;
  const int n = rs.rank();
  std::ostringstream bad;
  for (const Root& r : rs.roots()) {
    auto img = apply_sigma_simple(t, r.simple);
    if (apply_sigma_simple(t, img) != r.simple) bad << "sigma^2 != id on " << r.weight.str() << "; ";
    auto k = rs.find_root(img);
    if (!k) {
      bad << "sigma(" << r.weight.str() << ") is not a root; ";
      continue;
    }
    if (rs.roots()[*k].norm2 != r.norm2) bad << "sigma changes the length of " << r.weight.str() << "; ";
    bool in_phi1 = false;
    for (int i = 0; i < n; ++i)
      if (r.simple[i] != 0 && !s.diagram.is_black(i)) in_phi1 = true;
    if (r.positive() && in_phi1 && rs.roots()[*k].positive())
      bad << "sigma(" << r.weight.str() << ") is positive; ";
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rs.form(apply_sigma(t, rs.simple_root(a)), apply_sigma(t, rs.simple_root(b))) !=
          rs.form(rs.simple_root(a), rs.simple_root(b)))
        bad << "form not preserved on (" << a + 1 << "," << b + 1 << "); ";
  for (int a = 0; a < n; ++a) {
    if (s.diagram.is_black(a)) continue;
    if (apply_sigma(t, rs.fundamental(a)) != -rs.fundamental(t.bar[a]))
      bad << "sigma(omega_" << a + 1 << ") != -omega_" << t.bar[a] + 1 << "; ";
    for (int i = 0; i < n; ++i)
      if (t.beta[a][i] < 0 || (t.beta[a][i] != 0 && !s.diagram.is_black(i)))
        bad << "beta_" << a + 1 << " not in N Delta_0; ";
    if (t.beta[a] != t.beta[t.bar[a]]) bad << "beta_" << a + 1 << " != beta_" << t.bar[a] + 1 << "; ";
  }
  std::string d = bad.str();
  return {"involution", d.empty(), d.empty() ? "sigma^2 = id, form, roots, omega, beta checks hold" : d};
}

CheckResult restricted_check(const SymmetricSpace& s)
{
  std::ostringstream bad;
  int tested = 0;
  for (const auto& r : s.restricted.roots) {
    bool pos = true, neg = true;
    for (auto x : r.in_base) {
      pos = pos && x >= 0;
      neg = neg && x <= 0;
    }
    if (!pos && !neg) bad << "mixed signs for " << r.value.str() << "; ";
  }
  for_box(s.restricted.rank(), -2, 2, [&](const std::vector<Integer>& c) {
    Weight eta = s.roots.zero();
    for (std::size_t i = 0; i < c.size(); ++i) eta += Rational(c[i]) * s.lattice.generators[i];
    auto w_orbit = s.roots.orbit(eta);
    std::set<Weight> big(w_orbit.begin(), w_orbit.end());
    for (const Weight& x : restricted_orbit(s.roots, s.restricted, eta))
      if (!big.count(x)) bad << "restricted orbit of " << eta.str() << " leaves the W orbit; ";
    ++tested;
  });
  std::string d = bad.str();
  return {"restricted-roots", d.empty(),
          d.empty() ? "type " + s.restricted.type + ", orbit inclusion on " + std::to_string(tested) + " weights" : d};
}

CheckResult pairing_check(const SymmetricSpace& s)
{
  std::ostringstream bad;
  const int l = s.restricted.rank();
  for (int i = 0; i < l; ++i) {
    int c = s.restricted.doubled[i] ? 2 : 1;
    if (s.lattice.c[i] != c) bad << "c_" << i + 1 << " = " << s.lattice.c[i] << ", expected " << c << "; ";
    for (int j = 0; j < l; ++j) {
      Rational p = s.roots.pairing(s.lattice.generators[i], s.restricted.base[j]);
      if (p != (i == j ? c : 0)) bad << "<w~_" << i + 1 << ", a~_" << j + 1 << "^vee> = " << to_string(p) << "; ";
    }
  }
  std::string d = bad.str();
  return {"spherical-pairing", d.empty(), d.empty() ? "pairing matrix is diag(c)" : d};
}

CheckResult exceptional_check(const SymmetricSpace& s)
{
  std::ostringstream bad;
  for (int a : s.involution.exceptional) {
    Weight sa = apply_sigma(s.involution, s.roots.simple_root(a));
    Rational p = s.roots.pairing(sa, s.roots.simple_root(a));
    if (p != 1) bad << "<sigma(alpha_" << a + 1 << "), alpha_" << a + 1 << "^vee> = " << to_string(p) << "; ";
    if (s.involution.c_values[a] != 1) bad << "c_" << a + 1 << " != 1; ";
  }
  std::string d = bad.str();
  return {"exceptional-roots", d.empty(),
          d.empty() ? std::to_string(s.involution.exceptional.size()) + " exceptional root(s) with pairing 1" : d};
}

CheckResult cone_check(const SymmetricSpace& s, int box)
{
  std::ostringstream bad;
  int members = 0;
  std::vector<RatVector> cols;
  for (const auto& g : s.lattice.generators) cols.push_back(g.coords());
  for_box(s.roots.rank(), 0, box, [&](const std::vector<Integer>& x) {
    Weight w = Weight::from_ints(x);
    bool member = in_omega1(s, w);
    if (member != is_spherical(s, w)) bad << "is_spherical disagrees with Omega_1 membership at " << w.str() << "; ";
    if (!member) return;
    ++members;
    auto c = cols.empty() ? std::optional<RatVector>(RatVector{}) : solve_in_span(cols, w.coords());
    if (!c) {
      bad << w.str() << " outside the span of the omega~; ";
      return;
    }
    for (const auto& q : *c)
      if (!is_integral(q) || q < 0) bad << w.str() << " is not an N-combination of the omega~; ";
  });
  std::vector<IntVector> th;
  for (const auto& t : s.lattice.theta) th.push_back(t.to_ints());
  if (!(IntLattice(s.roots.rank(), th) == s.lattice.pic)) bad << "theta-basis does not span Pic(X); ";
  std::string d = bad.str();
  return {"omega1-cone", d.empty(),
          d.empty() ? std::to_string(members) + " dominant Omega_1 points in the box are N-combinations" : d};
}

CheckResult ls_check(const SymmetricSpace& s)
{
  std::ostringstream bad;
  int shapes = 0;
  for (const Weight& t : s.lattice.theta)
    for (int k = 1; k <= 2; ++k) {
      Weight lambda = Rational(k) * t;
      PathModel pm(s.roots, lambda);
      if (static_cast<Integer>(pm.size()) != s.roots.weyl_dim(lambda))
        bad << "|B_" << lambda.str() << "| != dim; ";
      Crystal c = crystal_generate(s.roots, Path::straight(lambda));
      std::set<Path> a(pm.realized().begin(), pm.realized().end()), b(c.nodes.begin(), c.nodes.end());
      if (a != b) bad << "crystal closure differs from LS paths for " << lambda.str() << "; ";
      Character ch;
      for (const Path& p : pm.realized()) ++ch[p.endpoint()];
      if (ch != s.roots.character(lambda)) bad << "endpoint character differs for " << lambda.str() << "; ";
      ++shapes;
    }
  std::string d = bad.str();
  return {"ls-paths", d.empty(), d.empty() ? std::to_string(shapes) + " shapes agree with dim and character" : d};
}

CheckResult smt_check(const SymmetricSpace& s, int bound)
{
  std::ostringstream bad;
  StandardMonomials sm(s);
  int cases = 0;
  for_box(s.lattice.theta_rank(), 0, bound, [&](const std::vector<Integer>& c) {
    Weight lambda = from_theta(s, c);
    for (const auto& I : subsets(s.restricted.rank())) {
      DimensionReport r = sm.verify_dimension(lambda, I);
      if (!r.pass) bad << "lambda " << lambda.str() << ": " << r.summary() << "; ";
      ++cases;
    }
  });
  std::string d = bad.str();
  return {"smt-dimension", d.empty(), d.empty() ? std::to_string(cases) + " (lambda, I) cases pass" : d};
}

CheckResult prv_check(const SymmetricSpace& s, int bound, int jobs)
{
  SweepReport r = prv_sweep(s, bound, jobs);
  return {"prv-sweep", r.pass(),
          std::to_string(r.instances.size() - r.failures.size()) + "/" + std::to_string(r.instances.size()) +
              " triples verified"};
}

CheckResult support_check(const SymmetricSpace& s)
{
  if (s.exceptional()) return {"surjectivity-support", true, "skipped: X has exceptional roots"};
  std::ostringstream bad;
  int pairs = 0;
  std::vector<Weight> small;
  for_box(s.lattice.theta_rank(), 0, 1, [&](const std::vector<Integer>& c) { small.push_back(from_theta(s, c)); });
  for (const Weight& l : small)
    for (const Weight& m : small) {
      SupportReport r = surjectivity_support_check(s, l, m);
      if (!r.pass) bad << "no witness for some nu below " << (l + m).str() << "; ";
      ++pairs;
    }
  std::string d = bad.str();
  return {"surjectivity-support", d.empty(), d.empty() ? std::to_string(pairs) + " pairs supported" : d};
}

}  // namespace

std::vector<CheckResult> diagram_suite(const SymmetricSpace& s, const SuiteOptions& options)
{
  std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
      {"involution", [&] { return involution_check(s); }},
      {"restricted-roots", [&] { return restricted_check(s); }},
      {"spherical-pairing", [&] { return pairing_check(s); }},
      {"exceptional-roots", [&] { return exceptional_check(s); }},
      {"omega1-cone", [&] { return cone_check(s, options.box); }},
      {"ls-paths", [&] { return ls_check(s); }},
      {"smt-dimension", [&] { return smt_check(s, options.bound); }},
      {"prv-sweep", [&] { return prv_check(s, options.bound, options.jobs); }},
      {"surjectivity-support", [&] { return support_check(s); }},
  };
  std::vector<CheckResult> out;
  for (auto& [name, run] : checks) {
    try {
      out.push_back(run());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

}  // namespace symmcomb
