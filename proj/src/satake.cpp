#include "symmcomb/satake.hpp"

#include "symmcomb/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace symmcomb {

// ------------------------------------------------------------- diagrams

std::vector<int> SatakeDiagram::bar() const
{
  std::vector<int> b(datum.rank());
  for (int i = 0; i < datum.rank(); ++i) b[i] = i;
  for (auto [i, j] : arrows) {
    b[i] = j;
    b[j] = i;
  }
  return b;
}

bool SatakeDiagram::is_black(int i) const
{
  return std::find(black.begin(), black.end(), i) != black.end();
}

void SatakeDiagram::check_structure() const
{
  const int n = datum.rank();
  std::set<int> seen_black;
  for (int b : black) {
    if (b < 0 || b >= n) throw InvalidInput("black node " + std::to_string(b + 1) + " out of range");
    if (!seen_black.insert(b).second) throw InvalidInput("black node listed twice");
  }
  std::set<int> used;
  for (auto [i, j] : arrows) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InvalidInput("arrow endpoint out of range");
    if (i == j) throw InvalidInput("arrow from a node to itself");
    if (is_black(i) || is_black(j)) throw InvalidInput("arrows must not touch black nodes");
    if (!used.insert(i).second || !used.insert(j).second)
      throw InvalidInput("arrows do not define an involution (node used twice)");
  }
}

std::vector<std::string> preset_names()
{
  return {"A1-split", "A2-split", "B2-split", "A2-swap", "B3-l1", "B4-l1", "F4", "A1xA1-swap"};
}

SatakeDiagram preset(const std::string& name)
{
  auto make = [&](const char* type, std::vector<int> black, std::vector<std::pair<int, int>> arrows) {
    SatakeDiagram d{CartanDatum::from_type(type), std::move(black), std::move(arrows), name};
    return d;
  };
  if (name == "A1-split") return make("A1", {}, {});
  if (name == "A2-split") return make("A2", {}, {});
  if (name == "B2-split") return make("B2", {}, {});
  if (name == "A2-swap") return make("A2", {}, {{0, 1}});
  if (name == "B3-l1") return make("B3", {0, 2}, {});
  if (name == "B4-l1") return make("B4", {0, 2, 3}, {});
  // Bourbaki numbering: the white node is the short end alpha_4.
  if (name == "F4") return make("F4", {0, 1, 2}, {});
  if (name == "A1xA1-swap") return make("A1xA1", {}, {{0, 1}});
  std::string known;
  for (auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
  throw InvalidInput("unknown preset '" + name + "' (known: " + known + ")");
}

// ------------------------------------------------------------ involution

namespace {

std::vector<int> column(const IntMatrix& m, int j)
{
  std::vector<int> out;
  for (const auto& row : m) out.push_back(row[j]);
  return out;
}

int sign_of(const std::vector<int>& v)
{
  for (int x : v)
    if (x != 0) return x > 0 ? 1 : -1;
  return 0;
}

[[noreturn]] void invalid(const std::string& why)
{
  throw InvalidInput("not a valid Satake diagram: " + why);
}

}  // namespace

std::vector<int> apply_sigma_simple(const InvolutionTable& t, const std::vector<int>& simple)
{
  const std::size_t n = simple.size();
  std::vector<int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += t.on_simple[i][j] * simple[j];
  return out;
}

Weight apply_sigma(const InvolutionTable& t, const Weight& w)
{
  const std::size_t n = w.rank();
  Weight out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t.on_weights[i][j] != 0) out[i] += Rational(t.on_weights[i][j]) * w[j];
  return out;
}

InvolutionTable build_involution(const RootSystem& rs, const SatakeDiagram& diagram)
{
  diagram.check_structure();
  const int n = rs.rank();
  if (diagram.datum.cartan != rs.datum().cartan)
    throw InvalidInput("diagram and root system disagree on the Cartan matrix");

  InvolutionTable t;
  t.bar = diagram.bar();
  const WeylElement w0 = rs.longest_element(diagram.black);

  t.on_simple.assign(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    if (diagram.is_black(j)) {
      t.on_simple[j][j] = 1;
    } else {
      for (int i = 0; i < n; ++i) t.on_simple[i][j] = -w0.entry(i, t.bar[j]);
    }
  }

  // sigma on fundamental coordinates: C S C^{-1}.
  RatMatrix c = to_rational(rs.datum().cartan);
  RatMatrix on_w = matmul(matmul(c, to_rational(t.on_simple)), inverse(c));
  t.on_weights.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integral(on_w[i][j])) invalid("sigma does not preserve the weight lattice");
      t.on_weights[i][j] = static_cast<int>(on_w[i][j].numerator());
    }

  // sigma^2 = id
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = 1;
    if (apply_sigma_simple(t, apply_sigma_simple(t, e)) != e) invalid("sigma is not an involution");
  }
  // Form preservation on simple roots.
  const auto& d = rs.datum();
  auto form_simple = [&](const std::vector<int>& a, const std::vector<int>& b) {
    long s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += static_cast<long>(a[i]) * b[j] * d.symmetrizer[i] * d.cartan[i][j];
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto ei = std::vector<int>(n, 0), ej = std::vector<int>(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      if (form_simple(column(t.on_simple, i), column(t.on_simple, j)) != form_simple(ei, ej))
        invalid("sigma does not preserve the invariant form");
    }
  // Roots to roots; positive non-fixed roots to negative roots.
  for (std::size_t idx = 0; idx < rs.roots().size(); ++idx) {
    const Root& r = rs.roots()[idx];
    auto img = apply_sigma_simple(t, r.simple);
    if (!rs.find_root(img)) invalid("sigma does not map roots to roots");
    if (r.positive() && img != r.simple && sign_of(img) > 0)
      invalid("sigma maps a positive root outside Phi_0 to a positive root");
  }
  // beta_alpha and sigma(omega_alpha).
  t.beta.assign(n, {});
  for (int a = 0; a < n; ++a) {
    if (diagram.is_black(a)) continue;
    auto s = column(t.on_simple, a);
    std::vector<int> beta(n, 0);
    for (int i = 0; i < n; ++i) beta[i] = -s[i] - (i == t.bar[a] ? 1 : 0);
    for (int i = 0; i < n; ++i) {
      if (beta[i] < 0) invalid("beta_alpha has a negative coefficient");
      if (beta[i] != 0 && !diagram.is_black(i)) invalid("beta_alpha is not supported on black roots");
    }
    t.beta[a] = beta;
    for (int i = 0; i < n; ++i) {
      int expect = (i == t.bar[a]) ? -1 : 0;
      if (t.on_weights[i][a] != expect) invalid("sigma(omega_alpha) != -omega_{bar(alpha)}");
    }
  }
  for (int a = 0; a < n; ++a)
    if (!diagram.is_black(a) && t.beta[a] != t.beta[t.bar[a]]) invalid("beta_alpha != beta_{bar(alpha)}");

  // c values and exceptional roots.
  for (int a = 0; a < n; ++a) {
    const Root& ra = rs.roots()[*rs.find_root([&] {
      std::vector<int> e(n, 0);
      e[a] = 1;
      return e;
    }())];
    Weight sa = rs.from_simple(column(t.on_simple, a));
    Rational p = rs.pairing(sa, ra);
    int cv = static_cast<int>(to_integer(2 - p));
    bool fixed = column(t.on_simple, a) == ra.simple;
    std::vector<int> neg = ra.simple;
    for (int& x : neg) x = -x;
    bool negated = column(t.on_simple, a) == neg;
    if (cv < 0 || cv > 4 || (cv == 0) != fixed || (cv == 4) != negated)
      invalid("c_alpha out of range for simple root " + std::to_string(a + 1));
    t.c_values.push_back(cv);
    if (!diagram.is_black(a) && t.bar[a] != a && rs.form(ra.weight, sa) != 0) {
      if (p != 1) invalid("exceptional root with <sigma(alpha), alpha^vee> != 1");
      t.exceptional.push_back(a);
    }
  }

  // Representatives: least white index in each class of equal alpha - sigma(alpha).
  std::map<std::vector<int>, int> classes;
  for (int a = 0; a < n; ++a) {
    if (diagram.is_black(a)) continue;
    auto s = column(t.on_simple, a);
    std::vector<int> tilde(n);
    for (int i = 0; i < n; ++i) tilde[i] = (i == a ? 1 : 0) - s[i];
    auto [it, inserted] = classes.emplace(tilde, a);
    if (!inserted) it->second = std::min(it->second, a);
  }
  for (auto& [k, a] : classes) t.representatives.push_back(a);
  std::sort(t.representatives.begin(), t.representatives.end());
  return t;
}

// ------------------------------------------------------ restricted roots

std::vector<Weight> RestrictedData::positive_roots() const
{
  std::vector<Weight> out;
  for (const auto& r : roots)
    if (std::all_of(r.in_base.begin(), r.in_base.end(), [](Integer x) { return x >= 0; }))
      out.push_back(r.value);
  return out;
}

std::string classify_cartan(const IntMatrix& cartan, const std::vector<bool>& doubled)
{
  const int n = static_cast<int>(cartan.size());
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] >= 0) continue;
    std::vector<int> comp{s};
    comp_of[s] = static_cast<int>(comps.size());
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (int j = 0; j < n; ++j)
        if (j != comp[h] && cartan[comp[h]][j] != 0 && comp_of[j] < 0) {
          comp_of[j] = comp_of[s];
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }

  std::string out;
  for (const auto& comp : comps) {
    const int k = static_cast<int>(comp.size());
    std::string name;
    bool bc = false;
    for (int i : comp)
      if (i < static_cast<int>(doubled.size()) && doubled[i]) bc = true;
    std::map<int, std::vector<int>> adj;
    int triple = 0, dbl = 0;
    std::pair<int, int> dbl_edge{-1, -1};
    for (int a : comp)
      for (int b : comp)
        if (a < b && cartan[a][b] != 0) {
          adj[a].push_back(b);
          adj[b].push_back(a);
          int prod = cartan[a][b] * cartan[b][a];
          if (prod == 3) ++triple;
          if (prod == 2) {
            ++dbl;
            dbl_edge = {a, b};
          }
        }
    auto degree = [&](int v) { return static_cast<int>(adj[v].size()); };
    int branch = -1;
    for (int v : comp)
      if (degree(v) >= 3) branch = v;

    if (bc) {
      name = "BC" + std::to_string(k);
    } else if (k == 1) {
      name = "A1";
    } else if (triple) {
      name = "G2";
    } else if (branch >= 0) {
      // Arm lengths from the branch node.
      std::vector<int> arms;
      for (int start : adj[branch]) {
        int len = 1, prev = branch, cur = start;
        while (degree(cur) == 2) {
          int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) name = "D" + std::to_string(k);
      else name = "E" + std::to_string(k);
    } else if (dbl == 0) {
      name = "A" + std::to_string(k);
    } else {
      auto [a, b] = dbl_edge;
      if (k == 2) {
        name = "B2";
      } else if (degree(a) == 2 && degree(b) == 2) {
        name = "F4";
      } else {
        int leaf = degree(a) == 1 ? a : b;
        int other = leaf == a ? b : a;
        // In B_k the leaf is short: its row carries the -2.
        name = (cartan[leaf][other] == -2 ? "B" : "C") + std::to_string(k);
      }
    }
    out += (out.empty() ? "" : "x") + name;
  }
  return out;
}

RestrictedData restricted_system(const RootSystem& rs, const InvolutionTable& t)
{
  const int n = rs.rank();
  RestrictedData r;
  std::map<std::vector<int>, int> counts;
  for (const Root& a : rs.roots()) {
    auto s = apply_sigma_simple(t, a.simple);
    std::vector<int> tilde(n);
    bool zero = true;
    for (int i = 0; i < n; ++i) {
      tilde[i] = a.simple[i] - s[i];
      if (tilde[i] != 0) zero = false;
    }
    if (!zero) ++counts[tilde];
  }

  std::vector<RatVector> base_cols;
  for (int a : t.representatives) {
    std::vector<int> tilde(n);
    auto s = apply_sigma_simple(t, [&] {
      std::vector<int> e(n, 0);
      e[a] = 1;
      return e;
    }());
    for (int i = 0; i < n; ++i) tilde[i] = (i == a ? 1 : 0) - s[i];
    r.base.push_back(rs.from_simple(tilde));
    RatVector col;
    for (int x : tilde) col.emplace_back(x);
    base_cols.push_back(col);
  }

  for (const auto& [tilde, mult] : counts) {
    RatVector target;
    for (int x : tilde) target.emplace_back(x);
    auto coords = solve_in_span(base_cols, target);
    if (!coords) throw VerificationFailure("restricted root outside the span of the restricted base");
    RestrictedRoot rr;
    rr.value = rs.from_simple(tilde);
    rr.multiplicity = mult;
    int sign = 0;
    for (const auto& q : *coords) {
      if (!is_integral(q)) throw VerificationFailure("restricted root not integral in the restricted base");
      Integer x = q.numerator();
      int sx = (x > 0) - (x < 0);
      if (sx != 0 && sign != 0 && sx != sign)
        throw VerificationFailure("restricted root with mixed signs in the restricted base");
      if (sx != 0) sign = sx;
      rr.in_base.push_back(x);
    }
    r.roots.push_back(std::move(rr));
  }
  std::sort(r.roots.begin(), r.roots.end(), [](const RestrictedRoot& a, const RestrictedRoot& b) {
    Integer ha = 0, hb = 0;
    for (auto x : a.in_base) ha += x;
    for (auto x : b.in_base) hb += x;
    if ((ha > 0) != (hb > 0)) return ha > 0;
    if (ha != hb) return ha > 0 ? ha < hb : ha > hb;
    return a.in_base > b.in_base;
  });

  std::set<std::vector<Integer>> present;
  for (const auto& rr : r.roots) present.insert(rr.in_base);
  for (const auto& rr : r.roots) {
    auto twice = rr.in_base;
    for (auto& x : twice) x *= 2;
    if (present.count(twice)) r.reduced = false;
  }
  const int l = t.rank();
  for (int i = 0; i < l; ++i) {
    std::vector<Integer> two(l, 0);
    two[i] = 2;
    r.doubled.push_back(present.count(two) > 0);
  }
  r.cartan.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      r.cartan[i][j] = static_cast<int>(to_integer(rs.pairing(r.base[j], r.base[i])));
  r.type = classify_cartan(r.cartan, r.doubled);
  return r;
}

std::vector<Weight> restricted_orbit(const RootSystem& rs, const RestrictedData& r, const Weight& eta)
{
  std::vector<Weight> out{eta};
  std::set<Weight> seen{eta};
  for (std::size_t h = 0; h < out.size(); ++h)
    for (const Weight& b : r.base) {
      Weight y = rs.reflect(out[h], b);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  return out;
}

// --------------------------------------------------- spherical lattice

SphericalLattice spherical_lattice(const RootSystem& rs, const InvolutionTable& t,
                                   const RestrictedData& r, int verify_bound)
{
  const int n = rs.rank();
  SphericalLattice L;
  for (int i = 0; i < t.rank(); ++i) {
    int a = t.representatives[i];
    Weight w = rs.zero();
    if (t.bar[a] != a) {
      w[a] = 1;
      w[t.bar[a]] = 1;
    } else if (t.c_values[a] == 4) {
      w[a] = 2;
    } else {
      w[a] = 1;
    }
    L.generators.push_back(w);
    L.c.push_back(r.doubled[i] ? 2 : 1);
  }
  for (int i = 0; i < t.rank(); ++i)
    for (int j = 0; j < t.rank(); ++j) {
      Rational p = rs.pairing(L.generators[i], r.base[j]);
      Rational expect = i == j ? Rational(L.c[i]) : Rational(0);
      if (p != expect)
        throw VerificationFailure("pairing <omega~_" + std::to_string(i + 1) + ", alpha~_" +
                                  std::to_string(j + 1) + "^vee> = " + to_string(p) + ", expected " +
                                  to_string(expect));
    }

  L.pic_generators = L.generators;
  for (int a : t.exceptional) L.pic_generators.push_back(rs.fundamental(a));
  std::vector<IntVector> gens, sph;
  for (auto& g : L.pic_generators) gens.push_back(g.to_ints());
  for (auto& g : L.generators) sph.push_back(g.to_ints());
  L.pic = IntLattice(n, gens);
  L.omega1 = IntLattice(n, sph);

  // Candidates of the three allowed shapes, in a fixed order.
  std::vector<std::pair<Weight, std::string>> cand;
  std::set<Weight> seen;
  auto offer = [&](Weight w, std::string label) {
    if (L.pic.contains(w.to_ints()) && seen.insert(w).second) cand.emplace_back(std::move(w), std::move(label));
  };
  for (int j = 0; j < n; ++j) {
    std::string wj = "w" + std::to_string(j + 1);
    offer(rs.fundamental(j), wj);
    offer(Rational(2) * rs.fundamental(j), "2" + wj);
    if (t.bar[j] != j) offer(rs.fundamental(j) + rs.fundamental(t.bar[j]), wj + "+w" + std::to_string(t.bar[j] + 1));
  }

  // Dominant Pic points of the verification box.
  std::vector<IntVector> box;
  IntVector x(n, 0);
  std::function<void(int)> sweep = [&](int k) {
    if (k == n) {
      if (L.pic.contains(x)) box.push_back(x);
      return;
    }
    for (int v = 0; v <= verify_bound; ++v) {
      x[k] = v;
      sweep(k + 1);
    }
  };
  sweep(0);

  const std::size_t rank = L.pic.rank();
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> search = [&](std::size_t from) -> bool {
    if (pick.size() == rank) {
      std::vector<IntVector> basis;
      std::vector<RatVector> cols;
      for (auto k : pick) {
        basis.push_back(cand[k].first.to_ints());
        cols.push_back(cand[k].first.coords());
      }
      if (!(IntLattice(n, basis) == L.pic)) return false;
      for (const auto& p : box) {
        RatVector target;
        for (auto v : p) target.emplace_back(v);
        auto coeffs = solve_in_span(cols, target);
        if (!coeffs) return false;
        for (const auto& q : *coeffs)
          if (!is_integral(q) || q < 0) return false;
      }
      return true;
    }
    for (std::size_t k = from; k < cand.size(); ++k) {
      pick.push_back(k);
      if (search(k + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!search(0)) throw VerificationFailure("no theta-basis of the allowed shapes certifies Pic+(X)");
  for (auto k : pick) {
    L.theta.push_back(cand[k].first);
    L.theta_forms.push_back(cand[k].second);
  }
  return L;
}

SymmetricSpace SymmetricSpace::build(const SatakeDiagram& diagram, int verify_bound)
{
  return build(diagram, RootSystem(diagram.datum), verify_bound);
}

SymmetricSpace SymmetricSpace::build(const SatakeDiagram& diagram, RootSystem rs, int verify_bound)
{
  InvolutionTable t = build_involution(rs, diagram);
  RestrictedData r = restricted_system(rs, t);
  SphericalLattice L = spherical_lattice(rs, t, r, verify_bound);
  return SymmetricSpace{diagram, std::move(rs), std::move(t), std::move(r), std::move(L)};
}

// ------------------------------------------------------- weight queries

bool is_special(const SymmetricSpace& s, const Weight& mu)
{
  return mu.is_integral() && apply_sigma(s.involution, mu) == -mu;
}

bool in_omega1(const SymmetricSpace& s, const Weight& mu)
{
  if (!is_special(s, mu)) return false;
  for (const auto& rr : s.restricted.roots)
    if (!is_integral(s.roots.pairing(mu, rr.value))) return false;
  return true;
}

bool is_spherical(const SymmetricSpace& s, const Weight& mu)
{
  if (!mu.is_dominant() || !is_special(s, mu)) return false;
  for (int i = 0; i < s.restricted.rank(); ++i) {
    Rational p = s.roots.pairing(mu, s.restricted.base[i]);
    if (s.restricted.doubled[i]) p /= 2;  // <mu, (2 alpha~)^vee>
    if (!is_integral(p)) return false;
  }
  return true;
}

bool in_pic(const SymmetricSpace& s, const Weight& mu)
{
  return mu.is_integral() && s.lattice.pic.contains(mu.to_ints());
}

std::optional<std::vector<Integer>> sigma_difference(const SymmetricSpace& s, const Weight& mu,
                                                     const Weight& lambda)
{
  std::vector<RatVector> cols;
  for (const auto& b : s.restricted.base) cols.push_back(b.coords());
  Weight diff = lambda - mu;
  if (cols.empty()) {
    if (!diff.is_zero()) return std::nullopt;
    return std::vector<Integer>{};
  }
  auto x = solve_in_span(cols, diff.coords());
  if (!x) return std::nullopt;
  std::vector<Integer> out;
  for (const auto& q : *x) {
    if (!is_integral(q)) return std::nullopt;
    out.push_back(q.numerator());
  }
  return out;
}

bool leq_sigma(const SymmetricSpace& s, const Weight& mu, const Weight& lambda)
{
  auto d = sigma_difference(s, mu, lambda);
  return d && std::all_of(d->begin(), d->end(), [](Integer x) { return x >= 0; });
}

std::vector<Integer> theta_coordinates(const SymmetricSpace& s, const Weight& mu)
{
  if (!in_pic(s, mu)) throw InvalidInput("weight " + mu.str() + " is not in Pic(X)");
  std::vector<RatVector> cols;
  for (const auto& t : s.lattice.theta) cols.push_back(t.coords());
  auto x = solve_in_span(cols, mu.coords());
  if (!x) throw VerificationFailure("Pic(X) element outside the theta span: " + mu.str());
  std::vector<Integer> out;
  for (const auto& q : *x) out.push_back(to_integer(q));
  return out;
}

Weight from_theta(const SymmetricSpace& s, const std::vector<Integer>& coords)
{
  if (coords.size() != s.lattice.theta.size())
    throw InvalidInput("expected " + std::to_string(s.lattice.theta.size()) + " theta-coordinates, got " +
                       std::to_string(coords.size()));
  Weight w = s.roots.zero();
  for (std::size_t k = 0; k < coords.size(); ++k) w += Rational(coords[k]) * s.lattice.theta[k];
  return w;
}

std::vector<std::pair<std::vector<Integer>, Weight>> dominant_below(
    const SymmetricSpace& s, const Weight& lambda, const std::vector<int>& frozen)
{
  const int l = s.restricted.rank();
  const int n = s.roots.rank();
  RatVector top = s.roots.to_simple(lambda);
  std::vector<RatVector> base_simple;
  for (const auto& b : s.restricted.base) base_simple.push_back(s.roots.to_simple(b));

  // Dominant weights have non-negative simple-root coordinates, which bounds n.
  std::vector<Integer> bound(l, 0);
  for (int i = 0; i < l; ++i) {
    bool frozen_i = std::find(frozen.begin(), frozen.end(), i) != frozen.end();
    std::optional<Rational> b;
    for (int k = 0; k < n; ++k)
      if (base_simple[i][k] > 0) {
        Rational q = top[k] / base_simple[i][k];
        if (!b || q < *b) b = q;
      }
    Integer v = 0;
    if (b) {
      v = b->numerator() / b->denominator();
      if (Rational(v) > *b) --v;
    }
    bound[i] = frozen_i ? 0 : v;
  }

  std::vector<std::pair<std::vector<Integer>, Weight>> out;
  std::vector<Integer> cur(l, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == l) {
      Weight mu = lambda;
      for (int k = 0; k < l; ++k) mu -= Rational(cur[k]) * s.restricted.base[k];
      if (mu.is_dominant()) out.emplace_back(cur, mu);
      return;
    }
    for (Integer v = 0; v <= bound[i]; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  if (std::all_of(bound.begin(), bound.end(), [](Integer b) { return b >= 0; })) rec(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SectionDim section_dim(const SymmetricSpace& s, const Weight& lambda)
{
  if (!in_pic(s, lambda)) throw InvalidInput("section_dim: weight " + lambda.str() + " is not in Pic(X)");
  SectionDim out;
  for (const auto& [n, mu] : dominant_below(s, lambda)) {
    Integer d = s.roots.weyl_dim(mu);
    out.terms.emplace_back(mu, d);
    out.total += d;
  }
  return out;
}

}  // namespace symmcomb
