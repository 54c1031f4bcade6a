#include "doctest.h"
#include "oracles.hpp"

#include "symmcomb/errors.hpp"
#include "symmcomb/smt.hpp"

#include <algorithm>
#include <random>

using namespace symmcomb;

namespace {

Weight W(std::vector<Integer> c) { return Weight::from_ints(c); }

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

// Raise with a random choice of operator at each step.
Path raise_randomly(const RootSystem& rs, Path p, std::mt19937& rng)
{
  std::uniform_int_distribution<int> pick(0, rs.rank() - 1);
  for (;;) {
    std::vector<int> order(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    bool moved = false;
    for (int i : order)
      if (auto up = raise(rs, p, i)) {
        p = *up;
        moved = true;
        break;
      }
    if (!moved) return p;
  }
}

// Least concatenation over all orderings of the blocks.
std::vector<WeylElement> brute_minimal(std::vector<std::vector<WeylElement>> blocks)
{
  std::vector<std::size_t> idx(blocks.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::optional<std::vector<WeylElement>> best;
  do {
    std::vector<WeylElement> w;
    for (auto i : idx) w.insert(w.end(), blocks[i].begin(), blocks[i].end());
    if (!best || std::lexicographical_compare(w.begin(), w.end(), best->begin(), best->end(), alphabet_less))
      best = w;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return *best;
}

bool word_le(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b)
{
  return !std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end(), alphabet_less);
}

}  // namespace

TEST_CASE("standard pairs for split A1")
{
  auto s = SymmetricSpace::build(preset("A1-split"));
  StandardMonomials sm(s);
  const auto& paths = sm.model(0).paths();
  REQUIRE(paths.size() == 3);
  int standard = 0;
  for (const auto& a : paths)
    for (const auto& b : paths) standard += sm.is_standard({0, 0}, {a, b});
  CHECK(standard == 5);
  const LSPath& top = paths[sm.model(0).head()];
  CHECK(sm.is_standard({0, 0}, {top, top}));
  for (const auto& a : paths) CHECK(sm.is_standard({0}, {a}));
}

TEST_CASE("enumeration for split A1")
{
  auto s = SymmetricSpace::build(preset("A1-split"));
  StandardMonomials sm(s);
  auto all = sm.enumerate(W({4}));
  CHECK(all.size() == 6);
  int with_s = 0;
  for (const auto& x : all) {
    CHECK(sm.shape(x) == W({4}));
    if (x.n[0] == 1) {
      ++with_s;
      CHECK(x.factors.empty());
    }
  }
  CHECK(with_s == 1);
  CHECK(sm.enumerate(W({4}), {0}).size() == 5);
  auto empty = sm.enumerate(W({0}));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].factors.empty());
  CHECK(empty[0].n == std::vector<Integer>{0});
  CHECK_THROWS_AS(sm.enumerate(W({1})), InvalidInput);

  auto r = sm.verify_dimension(W({4}));
  CHECK(r.pass);
  CHECK(r.summary() == "6 = 5+1 PASS");
  auto frozen = sm.verify_dimension(W({4}), {0});
  CHECK(frozen.pass);
  CHECK(frozen.count == 5);
}

TEST_CASE("dimension identity and its graded pieces")
{
  for (const char* name : {"A1-split", "A2-swap", "B3-l1", "A2-split", "A1xA1-swap"}) {
    CAPTURE(name);
    auto s = SymmetricSpace::build(preset(name));
    StandardMonomials sm(s);
    const int bound = s.lattice.theta_rank() > 1 ? 2 : 3;
    oracle::box(s.lattice.theta_rank(), 0, bound, [&](const std::vector<Integer>& c) {
      Weight lambda = from_theta(s, c);
      CAPTURE(lambda.str());
      for (const auto& I : subsets(s.restricted.rank())) {
        auto ms = sm.enumerate(lambda, I);
        // Right-hand side from the Weyl dimension formula over all admissible mu.
        Integer expected = 0;
        std::map<std::vector<Integer>, Integer> graded;
        oracle::box(s.restricted.rank(), 0, 8, [&](const std::vector<Integer>& n) {
          for (int i : I)
            if (n[i] != 0) return;
          Weight mu = lambda;
          for (std::size_t i = 0; i < n.size(); ++i) mu -= Rational(n[i]) * s.restricted.base[i];
          if (mu.is_dominant()) expected += s.roots.weyl_dim(mu);
        });
        CHECK(static_cast<Integer>(ms.size()) == expected);
        for (const auto& x : ms) {
          ++graded[x.n];
          CHECK(sm.shape(x) == lambda);
          CHECK(sm.flag_shape(x).is_dominant());
          CHECK(in_pic(s, sm.flag_shape(x)));
          CHECK(std::is_sorted(x.shapes.begin(), x.shapes.end()));
        }
        for (const auto& [n, count] : graded) {
          Weight mu = lambda;
          for (std::size_t i = 0; i < n.size(); ++i) mu -= Rational(n[i]) * s.restricted.base[i];
          CHECK(count == s.roots.weyl_dim(mu));
        }
        CHECK(sm.verify_dimension(lambda, I).pass);
      }
      std::vector<int> everything;
      for (int i = 0; i < s.restricted.rank(); ++i) everything.push_back(i);
      CHECK(static_cast<Integer>(sm.enumerate(lambda, everything).size()) == s.roots.weyl_dim(lambda));
    });
  }
}

TEST_CASE("freezing more boundary divisors gives a subset")
{
  for (const char* name : {"A2-split", "B2-split"}) {
    auto s = SymmetricSpace::build(preset(name));
    StandardMonomials sm(s);
    Weight lambda = from_theta(s, {2, 1});
    auto sets = subsets(s.restricted.rank());
    for (const auto& I : sets)
      for (const auto& J : sets) {
        if (!std::includes(J.begin(), J.end(), I.begin(), I.end())) continue;
        auto big = sm.enumerate(lambda, I), small = sm.enumerate(lambda, J);
        std::set<Monomial> b(big.begin(), big.end());
        for (const auto& x : small) CHECK(b.count(x));
      }
  }
}

TEST_CASE("standardness does not depend on the raising order")
{
  std::mt19937 rng(11);
  for (const char* name : {"A2-swap", "B2-split"}) {
    auto s = SymmetricSpace::build(preset(name));
    StandardMonomials sm(s);
    std::vector<int> shapes{0, 0, 1};
    if (s.lattice.theta_rank() < 2) shapes = {0, 0, 0};
    std::vector<std::vector<LSPath>> tuples{{}};
    for (int h : shapes) {
      std::vector<std::vector<LSPath>> next;
      for (const auto& t : tuples)
        for (const auto& p : sm.model(h).paths()) {
          auto u = t;
          u.push_back(p);
          next.push_back(u);
        }
      tuples = next;
    }
    Path head = sm.head(shapes);
    Integer standard = 0;
    for (const auto& t : tuples) {
      Path p = sm.concatenation(shapes, t);
      bool a = raise_randomly(s.roots, p, rng) == head;
      bool b = raise_randomly(s.roots, p, rng) == head;
      CHECK(a == b);
      CHECK(a == sm.is_standard(shapes, t));
      standard += a;
    }
    Weight mu = s.roots.zero();
    for (int h : shapes) mu += s.lattice.theta[h];
    CHECK(standard == s.roots.weyl_dim(mu));
  }
}

TEST_CASE("monomial order")
{
  auto s = SymmetricSpace::build(preset("A1-split"));
  StandardMonomials sm(s);
  auto all = sm.enumerate(W({4}));
  for (const auto& x : all) CHECK(sm.compare(x, x) == Order::equal);

  const Monomial* boundary = nullptr;
  const Monomial* flag = nullptr;
  for (const auto& x : all) (x.n[0] == 1 ? boundary : flag) = &x;
  // Componentwise vanishing orders decide first; the larger one ranks higher.
  CHECK(sm.compare(*flag, *boundary) == Order::less);
  CHECK(sm.compare(*boundary, *flag) == Order::greater);

  const auto& model = sm.model(0);
  std::optional<LSPath> plus, minus, zero;
  for (const auto& p : model.paths()) {
    Weight e = realize(model.poset(), p).endpoint();
    if (e == W({2})) plus = p;
    if (e == W({-2})) minus = p;
    if (e == W({0})) zero = p;
  }
  Monomial x{{0}, {0, 0}, {*plus, *minus}}, y{{0}, {0, 0}, {*zero, *zero}};
  // w(x) = e e s s is below the least rearrangement e s e s of w(y).
  CHECK(sm.compare(x, y) == Order::less);
  CHECK(sm.compare(y, x) == Order::greater);
  CHECK_THROWS_AS(sm.compare(x, Monomial{{0}, {0}, {*plus}}), InvalidInput);
}

TEST_CASE("monomial order is a partial order matching the block-permutation rule")
{
  for (const char* name : {"A1-split", "A2-swap", "B3-l1", "A2-split"}) {
    CAPTURE(name);
    auto s = SymmetricSpace::build(preset(name));
    StandardMonomials sm(s);
    std::vector<Integer> c(s.lattice.theta_rank(), 2);
    if (s.lattice.theta_rank() == 1) c[0] = 3;
    auto all = sm.enumerate(from_theta(s, c));
    const std::size_t n = all.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Order o = sm.compare(all[i], all[j]);
        le[i][j] = o == Order::less || o == Order::equal;
        if (all[i].n == all[j].n && i != j) {
          std::vector<WeylElement> wi;
          for (const auto& b : sm.word_blocks(all[i])) wi.insert(wi.end(), b.begin(), b.end());
          CHECK(le[i][j] == word_le(wi, brute_minimal(sm.word_blocks(all[j]))));
        }
      }
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(le[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && le[i][j]) CHECK(!le[j][i]);
        for (std::size_t k = 0; k < n; ++k)
          if (le[i][j] && le[j][k]) CHECK(le[i][k]);
      }
    }
  }
}
