#include "symmcomb/smt.hpp"

#include "symmcomb/errors.hpp"

#include <algorithm>
#include <tuple>

namespace symmcomb {

bool operator<(const Monomial& x, const Monomial& y)
{
  return std::tie(x.n, x.shapes, x.factors) < std::tie(y.n, y.shapes, y.factors);
}

std::string to_string(Order o)
{
  switch (o) {
    case Order::less: return "less";
    case Order::greater: return "greater";
    case Order::equal: return "equal";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

std::string DimensionReport::summary() const
{
  std::string rhs;
  for (const auto& t : terms) rhs += (rhs.empty() ? "" : "+") + std::to_string(t.weyl_dim);
  if (rhs.empty()) rhs = "0";
  return std::to_string(count) + " = " + rhs + (pass ? " PASS" : " FAIL");
}

namespace {

std::vector<int> expand_shapes(const std::vector<Integer>& theta_coords)
{
  std::vector<int> shapes;
  for (std::size_t k = 0; k < theta_coords.size(); ++k)
    for (Integer c = 0; c < theta_coords[k]; ++c) shapes.push_back(static_cast<int>(k));
  return shapes;
}

bool word_less(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b)
{
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), alphabet_less);
}

std::vector<WeylElement> flatten(const std::vector<std::vector<WeylElement>>& blocks)
{
  std::vector<WeylElement> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Lexicographically least concatenation of the blocks in some order.
std::vector<WeylElement> minimal_rearrangement(std::vector<std::vector<WeylElement>> blocks)
{
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    auto ab = a, ba = b;
    ab.insert(ab.end(), b.begin(), b.end());
    ba.insert(ba.end(), a.begin(), a.end());
    return word_less(ab, ba);
  });
  return flatten(blocks);
}

}  // namespace

StandardMonomials::StandardMonomials(const SymmetricSpace& s) : s_(&s)
{
  for (const Weight& t : s.lattice.theta) models_.emplace_back(s.roots, t);
}

Path StandardMonomials::concatenation(const std::vector<int>& shapes, const std::vector<LSPath>& factors) const
{
  if (shapes.size() != factors.size()) throw InvalidInput("monomial: shapes and factors differ in length");
  std::vector<Path> parts;
  for (std::size_t j = 0; j < shapes.size(); ++j) parts.push_back(realize(models_[shapes[j]].poset(), factors[j]));
  return concatenate(parts, s_->roots.rank());
}

Path StandardMonomials::head(const std::vector<int>& shapes) const
{
  std::vector<Path> parts;
  for (int h : shapes) parts.push_back(Path::straight(s_->lattice.theta[h]));
  return concatenate(parts, s_->roots.rank());
}

bool StandardMonomials::is_standard(const std::vector<int>& shapes, const std::vector<LSPath>& factors) const
{
  return raise_fully(s_->roots, concatenation(shapes, factors)) == head(shapes);
}

std::vector<std::vector<LSPath>> StandardMonomials::standard_factors(const std::vector<Integer>& theta_coords) const
{
  std::vector<int> shapes = expand_shapes(theta_coords);
  if (shapes.empty()) return {{}};
  Crystal c = crystal_generate(s_->roots, head(shapes), kDefaultCrystalCap, true);
  std::vector<std::vector<LSPath>> out;
  for (const Path& p : c.nodes) {
    std::vector<Path> parts = split(p, shapes.size());
    std::vector<LSPath> factors;
    for (std::size_t j = 0; j < shapes.size(); ++j) {
      auto pi = recognize(models_[shapes[j]].poset(), parts[j]);
      if (!pi) throw VerificationFailure("crystal element does not split into LS paths: " + p.str());
      factors.push_back(std::move(*pi));
    }
    out.push_back(std::move(factors));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> StandardMonomials::enumerate(const Weight& lambda, const std::vector<int>& frozen) const
{
  if (!in_pic(*s_, lambda)) throw InvalidInput("weight " + lambda.str() + " is not in Pic(X)");
  std::vector<Monomial> out;
  for (const auto& [n, mu] : dominant_below(*s_, lambda, frozen)) {
    std::vector<Integer> th = theta_coordinates(*s_, mu);
    for (Integer x : th)
      if (x < 0) throw VerificationFailure("dominant weight " + mu.str() + " has a negative theta-coordinate");
    std::vector<int> shapes = expand_shapes(th);
    for (auto& factors : standard_factors(th)) out.push_back(Monomial{n, shapes, std::move(factors)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

DimensionReport StandardMonomials::verify_dimension(const Weight& lambda, const std::vector<int>& frozen) const
{
  if (!in_pic(*s_, lambda)) throw InvalidInput("weight " + lambda.str() + " is not in Pic(X)");
  DimensionReport r;
  r.lambda = lambda;
  r.frozen = frozen;
  bool terms_ok = true;
  for (const auto& [n, mu] : dominant_below(*s_, lambda, frozen)) {
    DimensionTerm t{n, mu, s_->roots.weyl_dim(mu), 0};
    std::vector<Integer> th = theta_coordinates(*s_, mu);
    for (Integer x : th)
      if (x < 0) throw VerificationFailure("dominant weight " + mu.str() + " has a negative theta-coordinate");
    t.monomials = static_cast<Integer>(standard_factors(th).size());
    r.count += t.monomials;
    r.expected += t.weyl_dim;
    if (t.monomials != t.weyl_dim) terms_ok = false;
    r.terms.push_back(std::move(t));
  }
  r.pass = terms_ok && r.count == r.expected;
  return r;
}

Weight StandardMonomials::flag_shape(const Monomial& x) const
{
  Weight w = s_->roots.zero();
  for (int h : x.shapes) w += s_->lattice.theta[h];
  return w;
}

Weight StandardMonomials::shape(const Monomial& x) const
{
  Weight w = flag_shape(x);
  for (std::size_t i = 0; i < x.n.size(); ++i) w += Rational(x.n[i]) * s_->restricted.base[i];
  return w;
}

std::vector<std::vector<WeylElement>> StandardMonomials::word_blocks(const Monomial& x) const
{
  std::vector<std::vector<WeylElement>> blocks;
  for (std::size_t j = 0; j < x.factors.size(); ++j) {
    const BondedPoset& p = models_[x.shapes[j]].poset();
    std::vector<WeylElement> b;
    for (int letter : word(p, x.factors[j])) b.push_back(p.reps[letter]);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

Order StandardMonomials::compare(const Monomial& x, const Monomial& y) const
{
  if (shape(x) != shape(y))
    throw InvalidInput("compare: shapes " + shape(x).str() + " and " + shape(y).str() + " differ");
  if (x == y) return Order::equal;
  if (x.n != y.n) {
    bool le = true, ge = true;
    for (std::size_t i = 0; i < x.n.size(); ++i) {
      le = le && x.n[i] <= y.n[i];
      ge = ge && x.n[i] >= y.n[i];
    }
    if (le) return Order::less;
    if (ge) return Order::greater;
    return Order::incomparable;
  }
  auto bx = word_blocks(x), by = word_blocks(y);
  auto wx = flatten(bx), wy = flatten(by);
  if (!word_less(minimal_rearrangement(by), wx)) return Order::less;
  if (!word_less(minimal_rearrangement(bx), wy)) return Order::greater;
  return Order::incomparable;
}

}  // namespace symmcomb
