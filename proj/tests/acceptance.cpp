// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include "oracles.hpp"

#include "symmcomb/lspath.hpp"
#include "symmcomb/prv.hpp"
#include "symmcomb/satake.hpp"
#include "symmcomb/smt.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace symmcomb;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& what)
  {
    if (pass) note << what;
    pass = false;
  }
};

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

std::vector<Weight> small_box()
{
  std::vector<Weight> out;
  oracle::box(2, 0, 2, [&](const std::vector<Integer>& c) { out.push_back(Weight::from_ints(c)); });
  return out;
}

void crystal_dimension(Result& r)
{
  int cases = 0;
  for (const char* t : {"A2", "B2"}) {
    RootSystem rs(CartanDatum::from_type(t));
    for (const Weight& l : small_box()) {
      PathModel pm(rs, l);
      if (static_cast<Integer>(pm.size()) != rs.weyl_dim(l)) r.fail(std::string(t) + " " + l.str() + ": count");
      Character ch;
      for (const Path& p : pm.realized()) ++ch[p.endpoint()];
      if (ch != oracle::freudenthal(rs, l)) r.fail(std::string(t) + " " + l.str() + ": character");
      ++cases;
    }
  }
  r.note << cases << " shapes";
}

void restricted_types(Result& r)
{
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"B3-l1", "BC1"}, {"B4-l1", "BC1"}, {"F4", "BC1"}, {"A2-swap", "BC1"},
  };
  for (const auto& [name, type] : expected) {
    auto s = SymmetricSpace::build(preset(name));
    if (s.restricted.type != type || s.restricted.reduced) r.fail(name + " is " + s.restricted.type);
  }
  for (const char* name : {"A1-split", "A2-split", "B2-split"}) {
    auto s = SymmetricSpace::build(preset(name));
    if (!s.restricted.reduced) r.fail(std::string(name) + " is not reduced");
  }
  r.note << "B3, B4, F4, A2-swap are BC1; split presets reduced";
}

void spherical_pairing(Result& r)
{
  int entries = 0;
  for (const auto& name : preset_names()) {
    auto s = SymmetricSpace::build(preset(name));
    for (int i = 0; i < s.restricted.rank(); ++i) {
      int c = s.restricted.doubled[i] ? 2 : 1;
      if (s.lattice.c[i] != c) r.fail(name + ": c");
      for (int j = 0; j < s.restricted.rank(); ++j, ++entries)
        if (s.roots.pairing(s.lattice.generators[i], s.restricted.base[j]) != (i == j ? c : 0))
          r.fail(name + ": pairing");
    }
  }
  r.note << entries << " pairing entries over " << preset_names().size() << " presets";
}

void exceptional_roots(Result& r)
{
  int count = 0;
  for (const auto& name : preset_names()) {
    auto s = SymmetricSpace::build(preset(name));
    for (int a : s.involution.exceptional) {
      ++count;
      if (s.roots.pairing(apply_sigma(s.involution, s.roots.simple_root(a)), s.roots.simple_root(a)) != 1)
        r.fail(name + ": pairing");
    }
    if (name == "A2-swap" && s.involution.exceptional.size() != 2) r.fail("A2-swap must have two");
  }
  r.note << count << " exceptional roots";
}

void smt_dimension(Result& r)
{
  int cases = 0;
  for (const char* name : {"A1-split", "A2-swap", "B3-l1"}) {
    auto s = SymmetricSpace::build(preset(name));
    StandardMonomials sm(s);
    oracle::box(s.lattice.theta_rank(), 0, 3, [&](const std::vector<Integer>& c) {
      Weight lambda = from_theta(s, c);
      for (const auto& I : subsets(s.restricted.rank())) {
        Integer expected = 0;
        for (const auto& [n, mu] : dominant_below(s, lambda, I)) expected += s.roots.weyl_dim(mu);
        auto count = static_cast<Integer>(sm.enumerate(lambda, I).size());
        if (count != expected) r.fail(std::string(name) + " " + lambda.str());
        ++cases;
      }
    });
  }
  auto s = SymmetricSpace::build(preset("A1-split"));
  std::string anchor = StandardMonomials(s).verify_dimension(Weight::from_ints({4})).summary();
  if (anchor != "6 = 5+1 PASS") r.fail("anchor: " + anchor);
  r.note << cases << " (lambda, I) cases; anchor " << anchor;
}

void tensor_oracle(Result& r)
{
  int cases = 0;
  for (const char* t : {"A2", "B2"}) {
    RootSystem rs(CartanDatum::from_type(t));
    for (const Weight& l : small_box())
      for (const Weight& m : small_box()) {
        if (tensor_decompose(rs, l, m) != rs.char_decompose_product(l, m))
          r.fail(std::string(t) + " " + l.str() + " x " + m.str());
        ++cases;
      }
  }
  r.note << cases << " products";
}

void prv_sweeps(Result& r)
{
  std::size_t total = 0, failures = 0;
  for (const char* name : {"A1-split", "B3-l1", "A2-swap"}) {
    auto s = SymmetricSpace::build(preset(name));
    auto sweep = prv_sweep(s, 2, 4);
    total += sweep.instances.size();
    failures += sweep.failures.size();
    for (const auto& inst : sweep.instances)
      if (!inst.witness || !inst.witness->verified()) r.fail(std::string(name) + " " + inst.nu.str());
  }
  if (failures) r.fail("failures reported");
  r.note << total << " triples, " << failures << " failures";
}

void bond_gcds(Result& r)
{
  int pairs = 0;
  for (const char* t : {"A2", "B2"}) {
    RootSystem rs(CartanDatum::from_type(t));
    for (const Weight& l : small_box()) {
      if (l.is_zero()) continue;
      auto p = bonds_build(rs, l);
      for (int i = 0; i < static_cast<int>(p.size()); ++i)
        for (int j = 0; j < static_cast<int>(p.size()); ++j)
          if (p.less(i, j)) {
            if (chain_gcds(p, i, j).size() != 1) r.fail(std::string(t) + " " + l.str());
            ++pairs;
          }
    }
  }
  r.note << pairs << " comparable pairs";
}

void two_definitions(Result& r)
{
  int cases = 0;
  for (const char* t : {"A2", "B2"}) {
    RootSystem rs(CartanDatum::from_type(t));
    for (const Weight& l : small_box()) {
      PathModel pm(rs, l);
      auto c = crystal_generate(rs, Path::straight(l));
      if (std::set<Path>(c.nodes.begin(), c.nodes.end()) != std::set<Path>(pm.realized().begin(), pm.realized().end()))
        r.fail(std::string(t) + " " + l.str());
      ++cases;
    }
  }
  r.note << cases << " shapes";
}

void involution_suite(Result& r)
{
  for (const auto& name : preset_names()) {
    auto s = SymmetricSpace::build(preset(name));
    const auto& rs = s.roots;
    const auto& t = s.involution;
    const int n = rs.rank();
    for (int i = 0; i < n; ++i)
      if (apply_sigma(t, apply_sigma(t, rs.fundamental(i))) != rs.fundamental(i)) r.fail(name + ": sigma^2");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (rs.form(apply_sigma(t, rs.simple_root(a)), apply_sigma(t, rs.simple_root(b))) !=
            rs.form(rs.simple_root(a), rs.simple_root(b)))
          r.fail(name + ": form");
    for (std::size_t k : rs.positive_roots()) {
      const Root& root = rs.roots()[k];
      bool white = false;
      for (int i = 0; i < n; ++i) white = white || (root.simple[i] != 0 && !s.diagram.is_black(i));
      auto img = rs.find_root(apply_sigma_simple(t, root.simple));
      if (!img) r.fail(name + ": image is not a root");
      else if (white && rs.roots()[*img].positive()) r.fail(name + ": positive image");
    }
    for (int a = 0; a < n; ++a) {
      if (s.diagram.is_black(a)) continue;
      if (apply_sigma(t, rs.fundamental(a)) != -rs.fundamental(t.bar[a])) r.fail(name + ": omega");
      RatVector coeff = rs.to_simple(apply_sigma(t, rs.simple_root(a)) + rs.simple_root(t.bar[a]));
      for (int i = 0; i < n; ++i)
        if (coeff[i] > 0 || (coeff[i] != 0 && !s.diagram.is_black(i)) || !is_integral(coeff[i]))
          r.fail(name + ": beta");
      if (t.beta[a] != t.beta[t.bar[a]]) r.fail(name + ": beta symmetry");
    }
  }
  r.note << preset_names().size() << " presets";
}

}  // namespace

int main()
{
  const std::vector<std::pair<const char*, std::function<void(Result&)>>> criteria = {
      {"crystal/dimension agreement", crystal_dimension},
      {"restricted-type classification", restricted_types},
      {"spherical pairing", spherical_pairing},
      {"exceptional roots", exceptional_roots},
      {"standard monomial dimension", smt_dimension},
      {"tensor oracle equivalence", tensor_oracle},
      {"PRV witness sweep", prv_sweeps},
      {"bond gcd chain independence", bond_gcds},
      {"two-definition agreement", two_definitions},
      {"involution validity", involution_suite},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Result r;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(r);
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, r.note.str().c_str(),
                secs);
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
