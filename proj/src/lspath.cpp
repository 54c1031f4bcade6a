#include "symmcomb/lspath.hpp"

#include "symmcomb/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace symmcomb {

namespace {

Integer floor_of(const Rational& q)
{
  Integer f = q.numerator() / q.denominator();
  if (Rational(f) > q) --f;
  return f;
}

// Times t_0 = 0 < ... < t_k = 1 and h(t_j) = <pi(t_j), alpha_i^vee>.
struct Profile {
  std::vector<Rational> t;
  std::vector<Rational> h;
};

Profile profile(const Path& p, int i)
{
  Profile pr;
  pr.t.push_back(0);
  pr.h.push_back(0);
  for (const auto& s : p.segments()) {
    pr.t.push_back(pr.t.back() + s.duration);
    pr.h.push_back(pr.h.back() + s.velocity[i] * s.duration);
  }
  return pr;
}

Path reflect_between(const RootSystem& rs, const Path& p, const Rational& t1, const Rational& t2, int i)
{
  const Weight alpha = rs.simple_root(i);
  std::vector<Segment> out;
  Rational s = 0;
  for (const auto& seg : p.segments()) {
    Rational e = s + seg.duration;
    Rational a = std::min(e, t1), b = std::max(s, t1), c = std::min(e, t2), d = std::max(s, t2);
    if (a > s) out.push_back({seg.velocity, a - s});
    if (c > b) out.push_back({seg.velocity - seg.velocity[i] * alpha, c - b});
    if (e > d) out.push_back({seg.velocity, e - d});
    s = e;
  }
  return Path(std::move(out));
}

Rational minimum_of(const Profile& pr)
{
  Rational m = pr.h.front();
  for (const auto& x : pr.h) m = std::min(m, x);
  if (!is_integral(m))
    throw VerificationFailure("root operator: minimum " + to_string(m) + " of h is not an integer");
  return m;
}

}  // namespace

// ----------------------------------------------------------------- paths

Path::Path(std::vector<Segment> segments)
{
  Rational total = 0;
  for (auto& s : segments) {
    if (s.duration < 0) throw std::invalid_argument("Path: negative duration");
    total += s.duration;
    if (s.duration == 0) continue;
    if (!segs_.empty() && segs_.back().velocity == s.velocity)
      segs_.back().duration += s.duration;
    else
      segs_.push_back(std::move(s));
  }
  if (total != 1) throw std::invalid_argument("Path: durations sum to " + to_string(total) + ", not 1");
}

Path Path::straight(const Weight& endpoint) { return Path({Segment{endpoint, Rational(1)}}); }

Path Path::zero(std::size_t rank) { return straight(Weight(rank)); }

Weight Path::at(const Rational& t) const
{
  Weight pos(rank());
  Rational s = 0;
  for (const auto& seg : segs_) {
    if (t <= s) break;
    Rational d = std::min(seg.duration, t - s);
    pos += d * seg.velocity;
    s += seg.duration;
  }
  return pos;
}

Weight Path::endpoint() const
{
  Weight pos(rank());
  for (const auto& seg : segs_) pos += seg.duration * seg.velocity;
  return pos;
}

std::vector<Weight> Path::breakpoints() const
{
  std::vector<Weight> out;
  Weight pos(rank());
  for (const auto& seg : segs_) {
    pos += seg.duration * seg.velocity;
    out.push_back(pos);
  }
  return out;
}

std::vector<Rational> Path::times() const
{
  std::vector<Rational> out{0};
  for (const auto& seg : segs_) out.push_back(out.back() + seg.duration);
  return out;
}

bool operator<(const Path& a, const Path& b)
{
  return std::lexicographical_compare(a.segs_.begin(), a.segs_.end(), b.segs_.begin(), b.segs_.end(),
                                      [](const Segment& x, const Segment& y) {
                                        if (x.velocity != y.velocity) return x.velocity < y.velocity;
                                        return x.duration < y.duration;
                                      });
}

std::string Path::str() const
{
  std::string out = "[";
  for (std::size_t k = 0; k < segs_.size(); ++k) {
    if (k) out += ", ";
    out += to_string(segs_[k].duration) + "*" + segs_[k].velocity.str();
  }
  return out + "]";
}

// -------------------------------------------------------- root operators

std::optional<Path> lower(const RootSystem& rs, const Path& p, int i)
{
  Profile pr = profile(p, i);
  Rational m = minimum_of(pr);
  if (pr.h.back() - m < 1) return std::nullopt;
  std::size_t k1 = 0;
  for (std::size_t k = 0; k < pr.h.size(); ++k)
    if (pr.h[k] == m) k1 = k;
  Rational t1 = pr.t[k1], t2 = 1;
  for (std::size_t k = k1; k + 1 < pr.h.size(); ++k) {
    if (pr.h[k + 1] >= m + 1) {
      t2 = pr.t[k] + (m + 1 - pr.h[k]) * (pr.t[k + 1] - pr.t[k]) / (pr.h[k + 1] - pr.h[k]);
      break;
    }
  }
  return reflect_between(rs, p, t1, t2, i);
}

std::optional<Path> raise(const RootSystem& rs, const Path& p, int i)
{
  Profile pr = profile(p, i);
  Rational m = minimum_of(pr);
  if (m > -1) return std::nullopt;
  std::size_t k2 = 0;
  while (pr.h[k2] != m) ++k2;
  Rational t2 = pr.t[k2], t1 = 0;
  for (std::size_t k = k2; k-- > 0;) {
    if (pr.h[k] >= m + 1) {
      t1 = pr.t[k] + (m + 1 - pr.h[k]) * (pr.t[k + 1] - pr.t[k]) / (pr.h[k + 1] - pr.h[k]);
      break;
    }
  }
  return reflect_between(rs, p, t1, t2, i);
}

Path concatenate(const std::vector<Path>& parts, std::size_t rank)
{
  if (parts.empty()) return Path::zero(rank);
  const Rational u(static_cast<Integer>(parts.size()));
  std::vector<Segment> segs;
  for (const auto& p : parts)
    for (const auto& s : p.segments()) segs.push_back({u * s.velocity, s.duration / u});
  return Path(std::move(segs));
}

std::vector<Path> split(const Path& p, std::size_t parts)
{
  std::vector<Path> out;
  if (parts == 0) return out;
  const Rational u(static_cast<Integer>(parts));
  for (std::size_t j = 0; j < parts; ++j) {
    Rational lo = Rational(static_cast<Integer>(j)) / u, hi = Rational(static_cast<Integer>(j + 1)) / u;
    std::vector<Segment> segs;
    Rational s = 0;
    for (const auto& seg : p.segments()) {
      Rational e = s + seg.duration;
      Rational a = std::max(s, lo), b = std::min(e, hi);
      if (b > a) segs.push_back({Rational(1) / u * seg.velocity, (b - a) * u});
      s = e;
    }
    out.emplace_back(std::move(segs));
  }
  return out;
}

Path raise_fully(const RootSystem& rs, Path p)
{
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i)
      if (auto q = raise(rs, p, i)) {
        p = std::move(*q);
        moved = true;
        break;
      }
  }
  return p;
}

Crystal crystal_generate(const RootSystem& rs, const Path& seed, std::size_t cap, bool lowering_only)
{
  Crystal c;
  std::map<Path, std::size_t> index;
  auto visit = [&](Path p) {
    auto [it, inserted] = index.emplace(p, c.nodes.size());
    if (inserted) {
      if (c.nodes.size() >= cap)
        throw ResourceLimit("crystal closure exceeds the cap of " + std::to_string(cap) + " paths");
      c.nodes.push_back(std::move(p));
    }
    return it->second;
  };
  visit(seed);
  for (std::size_t h = 0; h < c.nodes.size(); ++h) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (auto q = lower(rs, c.nodes[h], i)) {
        std::size_t to = visit(std::move(*q));
        c.edges.push_back({h, i, to});
      }
      if (lowering_only) continue;
      if (auto q = raise(rs, c.nodes[h], i)) visit(std::move(*q));
    }
  }
  std::sort(c.edges.begin(), c.edges.end(), [](const CrystalEdge& a, const CrystalEdge& b) {
    return std::tie(a.from, a.color, a.to) < std::tie(b.from, b.color, b.to);
  });
  c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
  return c;
}

// ----------------------------------------------------- poset with bonds

std::optional<int> BondedPoset::index_of(const Weight& w) const
{
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (elements[k] == w) return static_cast<int>(k);
  return std::nullopt;
}

namespace {

using GcdTable = std::vector<std::vector<std::set<Integer>>>;

// All gcds of bonds along maximal chains from a up to b.
GcdTable gcd_table(const BondedPoset& p)
{
  const std::size_t n = p.size();
  GcdTable g(n, std::vector<std::set<Integer>>(n));
  std::vector<std::vector<std::pair<int, Integer>>> up(n);
  for (auto [a, b, f] : p.covers) up[a].emplace_back(b, f);
  std::vector<int> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return p.lengths[x] > p.lengths[y]; });
  for (int a : order)
    for (auto [k, f] : up[a]) {
      g[a][k].insert(f);
      for (std::size_t b = 0; b < n; ++b)
        for (Integer x : g[k][b]) g[a][b].insert(gcd(f, x));
    }
  return g;
}

BondedPoset trivial_poset(const RootSystem& rs, const Weight& lambda)
{
  BondedPoset p;
  p.lambda = lambda;
  p.elements = {lambda};
  p.reps = {rs.identity()};
  p.lengths = {0};
  p.bond = {{0}};
  return p;
}

}  // namespace

std::vector<Integer> chain_gcds(const BondedPoset& poset, int i, int j)
{
  GcdTable g = gcd_table(poset);
  return {g[i][j].begin(), g[i][j].end()};
}

BondedPoset bonds_build(const RootSystem& rs, const Weight& lambda)
{
  if (static_cast<int>(lambda.rank()) != rs.rank() || !lambda.is_integral() || !lambda.is_dominant())
    throw InvalidInput("bonds_build: " + lambda.str() + " is not a dominant integral weight");
  if (lambda.is_zero()) throw InvalidInput("bonds_build: lambda = 0 has a trivial poset");

  struct Entry {
    Weight mu;
    std::vector<int> word;
  };
  std::vector<Entry> entries;
  for (const Weight& mu : rs.orbit(lambda)) {
    Entry e{mu, {}};
    Weight cur = mu;
    while (!cur.is_dominant()) {
      int i = 0;
      while (cur[i] >= 0) ++i;
      e.word.push_back(i);
      cur = rs.reflect(cur, i);
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });

  BondedPoset p;
  p.lambda = lambda;
  for (auto& e : entries) {
    p.elements.push_back(e.mu);
    p.reps.push_back(rs.element(e.word));
    p.lengths.push_back(static_cast<int>(e.word.size()));
  }
  std::map<Weight, int> where;
  for (std::size_t k = 0; k < p.size(); ++k) where[p.elements[k]] = static_cast<int>(k);

  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t idx : rs.positive_roots()) {
      const Root& beta = rs.roots()[idx];
      Rational f = rs.pairing(p.elements[a], beta);
      if (f <= 0) continue;
      int b = where.at(p.elements[a] - f * beta.weight);
      if (p.lengths[b] == p.lengths[a] + 1) {
        p.covers.emplace_back(static_cast<int>(a), b, to_integer(f));
        p.n_lambda = lcm(p.n_lambda, to_integer(f));
      }
    }
  std::sort(p.covers.begin(), p.covers.end());

  GcdTable g = gcd_table(p);
  p.bond.assign(p.size(), std::vector<Integer>(p.size(), 0));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (g[a][b].empty()) continue;
      if (g[a][b].size() != 1)
        throw VerificationFailure("bond gcd depends on the chain between " + p.elements[a].str() + " and " +
                                  p.elements[b].str());
      p.bond[a][b] = *g[a][b].begin();
    }
  return p;
}

// --------------------------------------------------------------- LS paths

bool operator<(const LSPath& x, const LSPath& y)
{
  if (x.chain != y.chain) return x.chain < y.chain;
  return x.a < y.a;
}

Path realize(const BondedPoset& poset, const LSPath& pi)
{
  std::vector<Segment> segs;
  for (std::size_t k = pi.chain.size(); k-- > 0;)
    segs.push_back({poset.elements[pi.chain[k]], pi.a[k + 1] - pi.a[k]});
  return Path(std::move(segs));
}

std::vector<LSPath> ls_paths(const BondedPoset& poset)
{
  std::vector<LSPath> out;
  LSPath cur;
  std::function<void()> extend = [&]() {
    int last = cur.chain.back();
    Rational prev = cur.a.back();
    cur.a.push_back(1);
    out.push_back(cur);
    cur.a.pop_back();
    for (std::size_t j = 0; j < poset.size(); ++j) {
      if (!poset.less(last, static_cast<int>(j))) continue;
      Integer f = poset.bond[last][j];
      for (Integer k = floor_of(prev * f) + 1; k < f; ++k) {
        cur.chain.push_back(static_cast<int>(j));
        cur.a.push_back(Rational(k, f));
        extend();
        cur.chain.pop_back();
        cur.a.pop_back();
      }
    }
  };
  for (std::size_t s = 0; s < poset.size(); ++s) {
    cur.chain = {static_cast<int>(s)};
    cur.a = {0};
    extend();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<LSPath> recognize(const BondedPoset& poset, const Path& p)
{
  LSPath pi;
  pi.a.push_back(0);
  const auto& segs = p.segments();
  for (std::size_t k = segs.size(); k-- > 0;) {
    auto idx = poset.index_of(segs[k].velocity);
    if (!idx) return std::nullopt;
    pi.chain.push_back(*idx);
    pi.a.push_back(pi.a.back() + segs[k].duration);
  }
  for (std::size_t k = 0; k + 1 < pi.chain.size(); ++k) {
    if (!poset.less(pi.chain[k], pi.chain[k + 1])) return std::nullopt;
    if (!is_integral(pi.a[k + 1] * poset.bond[pi.chain[k]][pi.chain[k + 1]])) return std::nullopt;
  }
  return pi;
}

std::vector<int> word(const BondedPoset& poset, const LSPath& pi)
{
  std::vector<int> out;
  for (std::size_t k = 0; k < pi.chain.size(); ++k) {
    Integer e = to_integer(Rational(poset.n_lambda) * (pi.a[k + 1] - pi.a[k]));
    out.insert(out.end(), static_cast<std::size_t>(e), pi.chain[k]);
  }
  return out;
}

PathModel::PathModel(const RootSystem& rs, const Weight& lambda)
    : poset_(lambda.is_zero() && static_cast<int>(lambda.rank()) == rs.rank() ? trivial_poset(rs, lambda)
                                                                             : bonds_build(rs, lambda))
{
  paths_ = ls_paths(poset_);
  for (std::size_t k = 0; k < paths_.size(); ++k) {
    realized_.push_back(realize(poset_, paths_[k]));
    lookup_.emplace(realized_.back(), k);
  }
  head_ = lookup_.at(Path::straight(lambda));
}

std::optional<std::size_t> PathModel::index_of(const Path& p) const
{
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

}  // namespace symmcomb
