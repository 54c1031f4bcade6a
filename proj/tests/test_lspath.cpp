#include "doctest.h"
#include "oracles.hpp"

#include "symmcomb/errors.hpp"
#include "symmcomb/lspath.hpp"

using namespace symmcomb;

namespace {

Weight W(std::vector<Integer> c) { return Weight::from_ints(c); }

Rational min_pairing(const Path& p, const RootSystem& rs, int i)
{
  Rational m = 0;
  for (const Weight& b : p.breakpoints()) m = std::min(m, rs.pairing(b, rs.simple_root(i)));
  return m;
}

}  // namespace

TEST_CASE("paths are canonical")
{
  Weight v = W({1, 0});
  Path merged({Segment{v, Rational(1, 3)}, Segment{v, Rational(2, 3)}});
  CHECK(merged == Path::straight(v));
  CHECK(merged.segments().size() == 1);
  Path bent({Segment{W({2, 0}), Rational(1, 2)}, Segment{W({0, 2}), Rational(1, 2)}});
  CHECK(bent.at(Rational(1, 2)) == W({1, 0}));
  CHECK(bent.at(Rational(3, 4)) == Weight(RatVector{1, Rational(1, 2)}));
  CHECK(bent.endpoint() == W({1, 1}));
}

TEST_CASE("bonded posets")
{
  RootSystem a1(CartanDatum::from_type("A1")), a2(CartanDatum::from_type("A2"));
  auto p = bonds_build(a1, W({2}));
  CHECK(p.size() == 2);
  CHECK(p.bond[0][1] == 2);
  CHECK(p.n_lambda == 2);

  auto q = bonds_build(a2, W({1, 0}));
  REQUIRE(q.size() == 3);
  CHECK(q.reps[0].is_identity());
  CHECK(q.reps[1] == a2.element({0}));
  CHECK(q.reps[2] == a2.element({1, 0}));
  CHECK(q.less(0, 1));
  CHECK(q.less(1, 2));
  for (const auto& [i, j, b] : q.covers) CHECK(b == 1);
  CHECK(q.n_lambda == 1);

  CHECK(bonds_build(a2, W({1, 1})).size() == 6);
  CHECK_THROWS_AS(bonds_build(a2, W({0, 0})), InvalidInput);
}

TEST_CASE("bond gcds do not depend on the chain")
{
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanDatum::from_type(t));
    oracle::box(2, 0, 2, [&](const std::vector<Integer>& c) {
      Weight l = W(c);
      if (l.is_zero()) return;
      auto p = bonds_build(rs, l);
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
          if (!p.less(static_cast<int>(i), static_cast<int>(j))) continue;
          auto g = chain_gcds(p, static_cast<int>(i), static_cast<int>(j));
          CHECK(g.size() == 1);
          CHECK(g.front() == p.bond[i][j]);
        }
    });
  }
}

TEST_CASE("LS paths of small shapes")
{
  RootSystem a1(CartanDatum::from_type("A1")), a2(CartanDatum::from_type("A2"));
  PathModel zero(a2, W({0, 0}));
  CHECK(zero.size() == 1);
  CHECK(zero.realized().front().endpoint().is_zero());

  PathModel two(a1, W({2}));
  REQUIRE(two.size() == 3);
  std::set<std::vector<Rational>> subdivisions;
  for (const auto& pi : two.paths()) subdivisions.insert(pi.a);
  CHECK(subdivisions.count({0, Rational(1, 2), 1}));
  std::set<Weight> ends;
  for (const auto& p : two.realized()) ends.insert(p.endpoint());
  CHECK(ends == std::set<Weight>{W({2}), W({0}), W({-2})});

  PathModel w1(a2, W({1, 0}));
  CHECK(w1.size() == 3);
  for (const auto& pi : w1.paths()) CHECK(pi.chain.size() == 1);
}

TEST_CASE("words")
{
  RootSystem a1(CartanDatum::from_type("A1")), a2(CartanDatum::from_type("A2"));
  PathModel two(a1, W({2}));
  for (const auto& pi : two.paths()) {
    auto w = word(two.poset(), pi);
    CHECK(w.size() == 2);
    if (pi.chain.size() == 2) CHECK(w == std::vector<int>{0, 1});
    if (pi.chain == std::vector<int>{0}) CHECK(w == std::vector<int>{0, 0});
  }
  PathModel w1(a2, W({1, 0}));
  for (const auto& pi : w1.paths()) CHECK(word(w1.poset(), pi) == pi.chain);
}

TEST_CASE("root operators")
{
  RootSystem a1(CartanDatum::from_type("A1"));
  auto f = lower(a1, Path::straight(W({1})), 0);
  REQUIRE(f);
  CHECK(*f == Path::straight(W({-1})));
  CHECK(!raise(a1, Path::straight(W({1})), 0));

  Path p = Path::straight(W({2}));
  auto f1 = lower(a1, p, 0);
  REQUIRE(f1);
  CHECK(*f1 == Path({Segment{W({-2}), Rational(1, 2)}, Segment{W({2}), Rational(1, 2)}}));
  CHECK(f1->endpoint() == W({0}));
  auto f2 = lower(a1, *f1, 0);
  REQUIRE(f2);
  CHECK(*f2 == Path::straight(W({-2})));
  CHECK(!lower(a1, *f2, 0));
}

TEST_CASE("raising and lowering are inverse")
{
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanDatum::from_type(t));
    oracle::box(2, 0, 2, [&](const std::vector<Integer>& c) {
      PathModel pm(rs, W(c));
      for (const Path& p : pm.realized())
        for (int i = 0; i < rs.rank(); ++i) {
          CHECK(is_integral(min_pairing(p, rs, i)));
          if (auto down = lower(rs, p, i)) {
            CHECK(down->endpoint() == p.endpoint() - rs.simple_root(i));
            auto back = raise(rs, *down, i);
            REQUIRE(back);
            CHECK(*back == p);
          }
          if (auto up = raise(rs, p, i)) {
            CHECK(up->endpoint() == p.endpoint() + rs.simple_root(i));
            auto back = lower(rs, *up, i);
            REQUIRE(back);
            CHECK(*back == p);
          }
        }
      for (int i = 0; i < rs.rank(); ++i) CHECK(!raise(rs, Path::straight(W(c)), i));
    });
  }
}

TEST_CASE("crystal closure")
{
  RootSystem a1(CartanDatum::from_type("A1")), a2(CartanDatum::from_type("A2"));
  auto c = crystal_generate(a1, Path::straight(W({2})));
  CHECK(c.nodes.size() == 3);
  CHECK(c.edges.size() == 2);
  CHECK(crystal_generate(a2, Path::straight(W({1, 1}))).nodes.size() == 8);
  auto z = crystal_generate(a2, Path::zero(2));
  CHECK(z.nodes.size() == 1);
  CHECK(z.edges.empty());
  CHECK_THROWS_AS(crystal_generate(a2, Path::straight(W({2, 2})), 10), ResourceLimit);
}

TEST_CASE("LS paths match dimension, character and crystal")
{
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanDatum::from_type(t));
    oracle::box(2, 0, 2, [&](const std::vector<Integer>& c) {
      Weight l = W(c);
      CAPTURE(l.str());
      PathModel pm(rs, l);
      CHECK(static_cast<Integer>(pm.size()) == rs.weyl_dim(l));
      Character ch;
      for (const Path& p : pm.realized()) ++ch[p.endpoint()];
      CHECK(ch == oracle::freudenthal(rs, l));
      auto cr = crystal_generate(rs, Path::straight(l));
      CHECK(std::set<Path>(cr.nodes.begin(), cr.nodes.end()) ==
            std::set<Path>(pm.realized().begin(), pm.realized().end()));
      for (std::size_t k = 0; k < pm.size(); ++k) {
        auto back = recognize(pm.poset(), pm.realized()[k]);
        REQUIRE(back);
        CHECK(*back == pm.paths()[k]);
        CHECK(pm.realized()[k].endpoint().is_integral());
      }
    });
  }
}

TEST_CASE("each component of a concatenation has one highest element")
{
  RootSystem b2(CartanDatum::from_type("B2"));
  PathModel a(b2, W({1, 0})), b(b2, W({0, 1}));
  std::set<Path> all, heads;
  for (const Path& x : a.realized())
    for (const Path& y : b.realized()) all.insert(concatenate({x, y}, 2));
  for (const Path& p : all) {
    Path top = raise_fully(b2, p);
    CHECK(all.count(top));
    for (int i = 0; i < 2; ++i) CHECK(min_pairing(top, b2, i) == 0);
    heads.insert(top);
  }
  Integer total = 0;
  for (const Path& h : heads) {
    CHECK(h.endpoint().is_dominant());
    auto comp = crystal_generate(b2, h);
    total += static_cast<Integer>(comp.nodes.size());
    CHECK(static_cast<Integer>(comp.nodes.size()) == b2.weyl_dim(h.endpoint()));
  }
  CHECK(total == static_cast<Integer>(all.size()));
}

TEST_CASE("split inverts concatenate")
{
  RootSystem a2(CartanDatum::from_type("A2"));
  PathModel pm(a2, W({1, 1}));
  for (const Path& x : pm.realized())
    for (const Path& y : pm.realized()) {
      auto parts = split(concatenate({x, y}, 2), 2);
      REQUIRE(parts.size() == 2);
      CHECK(parts[0] == x);
      CHECK(parts[1] == y);
    }
}
