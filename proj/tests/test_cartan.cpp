#include "doctest.h"
#include "oracles.hpp"

#include "symmcomb/cartan.hpp"
#include "symmcomb/errors.hpp"

#include <random>

using namespace symmcomb;

namespace {

Weight W(std::vector<Integer> c) { return Weight::from_ints(c); }

Integer factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("root counts and group orders")
{
  RootSystem a1(CartanDatum::from_matrix({{2}}));
  CHECK(a1.roots().size() == 2);
  CHECK(a1.weyl_group().size() == 2);

  for (int n = 1; n <= 4; ++n) {
    RootSystem a(CartanDatum::from_type("A" + std::to_string(n)));
    CHECK(a.roots().size() == static_cast<std::size_t>(n * (n + 1)));
    CHECK(a.weyl_group().size() == static_cast<std::size_t>(factorial(n + 1)));
  }
  for (int n = 2; n <= 4; ++n) {
    RootSystem b(CartanDatum::from_type("B" + std::to_string(n)));
    CHECK(b.roots().size() == static_cast<std::size_t>(2 * n * n));
    CHECK(b.weyl_group().size() == static_cast<std::size_t>((1 << n) * factorial(n)));
    RootSystem c(CartanDatum::from_type("C" + std::to_string(n)));
    CHECK(c.roots().size() == static_cast<std::size_t>(2 * n * n));
  }
  CHECK(RootSystem(CartanDatum::from_type("G2")).roots().size() == 12);
  CHECK(RootSystem(CartanDatum::from_type("F4")).roots().size() == 48);
  CHECK(RootSystem(CartanDatum::from_type("F4")).weyl_group().size() == 1152);
  CHECK(RootSystem(CartanDatum::from_type("D4")).roots().size() == 24);
  CHECK(RootSystem(CartanDatum::from_type("A1xA1")).roots().size() == 4);
}

TEST_CASE("non-finite data is rejected")
{
  CHECK_THROWS_AS(CartanDatum::from_matrix({{2, -1}, {-4, 2}}), InvalidInput);
  CHECK_THROWS_AS(CartanDatum::from_matrix({{2, -2}, {-2, 2}}), InvalidInput);
  CHECK_THROWS_AS(CartanDatum::from_matrix({{2, -1}, {0, 2}}), InvalidInput);
  CHECK_THROWS_AS(CartanDatum::from_matrix({{2, 1}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(CartanDatum::from_type("Q7"), InvalidInput);
}

TEST_CASE("roots are signed and both coordinate systems agree")
{
  for (const char* t : {"A3", "B3", "C3", "G2", "F4"}) {
    RootSystem rs(CartanDatum::from_type(t));
    for (const Root& r : rs.roots()) {
      bool pos = true, neg = true;
      for (int x : r.simple) {
        pos = pos && x >= 0;
        neg = neg && x <= 0;
      }
      CHECK((pos || neg));
      CHECK(rs.from_simple(r.simple) == r.weight);
      CHECK(rs.form(r.weight, r.weight) == r.norm2);
    }
  }
}

TEST_CASE("Weyl elements preserve the form and length counts inversions")
{
  for (const char* t : {"A2", "B3", "G2"}) {
    RootSystem rs(CartanDatum::from_type(t));
    for (const WeylElement& w : rs.weyl_group()) {
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j)
          CHECK(rs.form(rs.apply(w, rs.simple_root(i)), rs.apply(w, rs.simple_root(j))) ==
                rs.form(rs.simple_root(i), rs.simple_root(j)));
      CHECK(w.length() == rs.inversion_count(w));
    }
  }
}

TEST_CASE("dominant representative")
{
  RootSystem a2(CartanDatum::from_type("A2"));
  auto [d, w] = a2.dominant_representative(W({1, 1}));
  CHECK(d == W({1, 1}));
  CHECK(w.is_identity());
  auto [d2, w2] = a2.dominant_representative(W({-2, 1}));
  CHECK(d2 == W({1, 1}));
  CHECK(a2.apply(w2, W({-2, 1})) == d2);

  RootSystem a1(CartanDatum::from_type("A1"));
  CHECK(a1.dominant_of(W({-3})) == W({3}));

  std::mt19937 rng(7);
  for (const char* t : {"B3", "G2", "F4"}) {
    RootSystem rs(CartanDatum::from_type(t));
    std::uniform_int_distribution<int> coord(-3, 3), gen(0, rs.rank() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Integer> c;
      for (int i = 0; i < rs.rank(); ++i) c.push_back(coord(rng));
      Weight eta = W(c);
      Weight dom = rs.dominant_of(eta);
      CHECK(dom.is_dominant());
      CHECK(rs.dominant_of(dom) == dom);
      Weight moved = eta;
      for (int k = 0; k < 6; ++k) moved = rs.reflect(moved, gen(rng));
      CHECK(rs.dominant_of(moved) == dom);
      auto [d3, w3] = rs.dominant_representative(moved);
      CHECK(rs.apply(w3, moved) == d3);
    }
  }
}

TEST_CASE("Weyl dimension against closed forms")
{
  RootSystem a2(CartanDatum::from_type("A2")), b2(CartanDatum::from_type("B2"));
  CHECK(a2.weyl_dim(W({0, 0})) == 1);
  CHECK(a2.weyl_dim(W({1, 1})) == 8);
  CHECK(b2.weyl_dim(W({0, 1})) == 4);
  oracle::box(2, 0, 4, [&](const std::vector<Integer>& c) {
    CHECK(a2.weyl_dim(W(c)) == oracle::dim_a2(c[0], c[1]));
    CHECK(b2.weyl_dim(W(c)) == oracle::dim_b2(c[0], c[1]));
  });
  CHECK_THROWS_AS(a2.weyl_dim(W({-1, 0})), InvalidInput);
  CHECK_THROWS_AS(a2.weyl_dim(Weight(RatVector{Rational(1, 2), 0})), InvalidInput);
}

TEST_CASE("characters against Gelfand-Tsetlin patterns and Freudenthal")
{
  RootSystem a2(CartanDatum::from_type("A2"));
  oracle::box(2, 0, 3, [&](const std::vector<Integer>& c) {
    CHECK(a2.character(W(c)) == oracle::gt_character_a2(static_cast<int>(c[0]), static_cast<int>(c[1])));
  });
  for (const char* t : {"B2", "G2", "B3"}) {
    RootSystem rs(CartanDatum::from_type(t));
    oracle::box(rs.rank(), 0, 2, [&](const std::vector<Integer>& c) {
      Character ch = rs.character(W(c));
      CHECK(ch == oracle::freudenthal(rs, W(c)));
      CHECK(character_dimension(ch) == rs.weyl_dim(W(c)));
    });
  }
}

TEST_CASE("character decomposition of tensor products")
{
  RootSystem a1(CartanDatum::from_type("A1")), a2(CartanDatum::from_type("A2"));
  std::map<Weight, Integer> cg{{W({4}), 1}, {W({2}), 1}, {W({0}), 1}};
  CHECK(a1.char_decompose_product(W({2}), W({2})) == cg);
  std::map<Weight, Integer> a2_dual{{W({1, 1}), 1}, {W({0, 0}), 1}};
  CHECK(a2.char_decompose_product(W({1, 0}), W({0, 1})) == a2_dual);

  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanDatum::from_type(t));
    oracle::box(4, 0, 2, [&](const std::vector<Integer>& c) {
      Weight l = W({c[0], c[1]}), m = W({c[2], c[3]});
      auto d = rs.char_decompose_product(l, m);
      CHECK(d == oracle::klimyk(rs, l, m));
      Integer total = 0;
      for (const auto& [nu, k] : d) total += k * rs.weyl_dim(nu);
      CHECK(total == rs.weyl_dim(l) * rs.weyl_dim(m));
    });
    CHECK(rs.char_decompose_product(W({2, 1}), rs.zero()) == std::map<Weight, Integer>{{W({2, 1}), 1}});
  }
}

TEST_CASE("longest elements of parabolic subgroups")
{
  RootSystem a2(CartanDatum::from_type("A2")), b3(CartanDatum::from_type("B3"));
  CHECK(a2.longest_element({}).is_identity());
  CHECK(a2.longest_element({0}) == a2.element({0}));
  WeylElement w = b3.longest_element({0, 2});
  CHECK(w == b3.element({0, 2}));
  CHECK(w.length() == 2);
  WeylElement w0 = b3.longest_element({0, 1, 2});
  CHECK(w0.length() == 9);
  for (std::size_t k : b3.positive_roots()) {
    auto img = b3.apply_simple(w0, b3.roots()[k].simple);
    CHECK(!b3.roots()[*b3.find_root(img)].positive());
  }
}

TEST_CASE("alphabet order refines length")
{
  RootSystem b2(CartanDatum::from_type("B2"));
  auto group = b2.weyl_group();
  for (const auto& x : group)
    for (const auto& y : group) {
      if (x.length() < y.length()) CHECK(alphabet_less(x, y));
      if (x == y) CHECK(!alphabet_less(x, y));
      CHECK((alphabet_less(x, y) || alphabet_less(y, x) || x == y));
    }
}

TEST_CASE("precomputed root lists are validated")
{
  auto datum = CartanDatum::from_type("B2");
  RootSystem rs(datum);
  std::vector<std::vector<int>> roots;
  for (const auto& r : rs.roots()) roots.push_back(r.simple);
  RootSystem again(datum, roots);
  CHECK(again.roots().size() == rs.roots().size());
  roots.pop_back();
  CHECK_THROWS(RootSystem(datum, roots));
}
