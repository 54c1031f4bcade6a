#include "symmcomb/cartan.hpp"

#include "symmcomb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace symmcomb {

// ---------------------------------------------------------------- Weight

Weight Weight::from_ints(const std::vector<Integer>& coords)
{
  RatVector c;
  for (Integer x : coords) c.emplace_back(x);
  return Weight(std::move(c));
}

bool Weight::is_integral() const
{
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.denominator() == 1; });
}

bool Weight::is_dominant() const
{
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q >= 0; });
}

bool Weight::is_zero() const
{
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

IntVector Weight::to_ints() const
{
  IntVector out;
  for (const auto& q : c_) out.push_back(to_integer(q));
  return out;
}

Weight& Weight::operator+=(const Weight& o)
{
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o)
{
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s)
{
  for (auto& q : c_) q *= s;
  return *this;
}

std::string Weight::str() const
{
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += to_string(c_[i]);
  }
  return out + ")";
}

// ----------------------------------------------------------- CartanDatum

namespace {

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b)
{
  const std::size_t n = a.size(), m = b.size();
  IntMatrix out(n + m, std::vector<int>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[n + i][n + j] = b[i][j];
  return out;
}

IntMatrix simple_type_matrix(char letter, int n)
{
  auto bad = [&] {
    return InvalidInput(std::string("unknown Cartan type ") + letter + std::to_string(n));
  };
  if (n < 1) throw bad();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 3) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;  // alpha_1, alpha_2 long
      break;
    case 'G':
      if (n != 2) throw bad();
      c[0][1] = -3;  // alpha_1 short
      c[1][0] = -1;
      break;
    default:
      throw bad();
  }
  return c;
}

}  // namespace

CartanDatum CartanDatum::from_type(std::string_view type)
{
  IntMatrix total;
  std::string label(type);
  std::size_t pos = 0;
  bool any = false;
  while (pos < type.size()) {
    std::size_t end = type.find_first_of("x+", pos);
    if (end == std::string_view::npos) end = type.size();
    std::string_view part = type.substr(pos, end - pos);
    if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
      throw InvalidInput("malformed Cartan type '" + label + "'");
    int n = 0;
    for (char ch : part.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw InvalidInput("malformed Cartan type '" + label + "'");
      n = n * 10 + (ch - '0');
    }
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    total = block_sum(total, simple_type_matrix(letter, n));
    any = true;
    pos = end + 1;
  }
  if (!any) throw InvalidInput("empty Cartan type");
  CartanDatum d = from_matrix(total);
  d.label = label;
  return d;
}

CartanDatum CartanDatum::from_matrix(const IntMatrix& cartan)
{
  const int n = static_cast<int>(cartan.size());
  if (n == 0) throw InvalidInput("Cartan matrix is empty");
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != n) throw InvalidInput("Cartan matrix is not square");

  // Symmetrizer by propagation over each connected component.
  std::vector<Rational> d(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> comp{start}, stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        if (cartan[j][i] == 0) throw InvalidInput("Cartan matrix: C_ij = 0 but C_ji != 0");
        Rational dj = d[i] * Rational(cartan[i][j], cartan[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          comp.push_back(j);
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw InvalidInput("Cartan matrix is not symmetrizable");
        }
      }
    }
    Integer den = 1;
    for (int i : comp) den = lcm(den, d[i].denominator());
    Integer g = 0;
    for (int i : comp) g = gcd(g, (d[i] * den).numerator());
    for (int i : comp) d[i] = d[i] * den / g;
  }

  CartanDatum out;
  out.cartan = cartan;
  for (const auto& q : d) out.symmetrizer.push_back(static_cast<int>(to_integer(q)));
  out.label = "custom";
  out.validate();
  return out;
}

void CartanDatum::validate() const
{
  const int n = rank();
  if (n == 0) throw InvalidInput("Cartan matrix is empty");
  if (static_cast<int>(symmetrizer.size()) != n) throw InvalidInput("symmetrizer has wrong length");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[i].size()) != n) throw InvalidInput("Cartan matrix is not square");
    if (cartan[i][i] != 2) throw InvalidInput("Cartan matrix diagonal entries must be 2");
    if (symmetrizer[i] <= 0) throw InvalidInput("symmetrizer entries must be positive");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) throw InvalidInput("Cartan matrix off-diagonal entries must be <= 0");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw InvalidInput("Cartan matrix: C_ij = 0 must imply C_ji = 0");
      if (symmetrizer[i] * cartan[i][j] != symmetrizer[j] * cartan[j][i])
        throw InvalidInput("symmetrizer does not symmetrize the Cartan matrix");
    }
  }
  // Positive definiteness via leading principal minors of the symmetrized matrix.
  for (int k = 1; k <= n; ++k) {
    RatMatrix m(k, RatVector(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = Rational(symmetrizer[i] * cartan[i][j]);
    if (determinant(m) <= 0)
      throw InvalidInput("Cartan matrix is not of finite type (symmetrization not positive definite)");
  }
}

// ------------------------------------------------------------ WeylElement

bool Root::positive() const
{
  for (int x : simple)
    if (x != 0) return x > 0;
  return false;
}

std::string WeylElement::str() const
{
  if (word_.empty()) return "e";
  std::string out;
  for (int i : word_) out += "s" + std::to_string(i + 1);
  return out;
}

bool alphabet_less(const WeylElement& a, const WeylElement& b)
{
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

// ------------------------------------------------------------- RootSystem

namespace {
constexpr std::size_t kRootCap = 100'000;
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum))
{
  datum_.validate();
  const int n = rank();
  cartan_inv_ = inverse(to_rational(datum_.cartan));

  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    queue.push_back(e);
    std::vector<int> m(n, 0);
    m[i] = -1;
    queue.push_back(m);
  }
  std::set<std::vector<int>> seen(queue.begin(), queue.end());
  std::vector<std::vector<int>> found;
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    found.push_back(beta);
    for (int i = 0; i < n; ++i) {
      int p = 0;  // <beta, alpha_i^vee>
      for (int j = 0; j < n; ++j) p += beta[j] * datum_.cartan[i][j];
      if (p == 0) continue;
      auto img = beta;
      img[i] -= p;
      if (seen.insert(img).second) {
        if (seen.size() > kRootCap) throw ResourceLimit("root closure exceeded cap");
        queue.push_back(img);
      }
    }
  }
  install_roots(std::move(found));
}

RootSystem::RootSystem(CartanDatum datum, std::vector<std::vector<int>> roots) : datum_(std::move(datum))
{
  datum_.validate();
  const int n = rank();
  cartan_inv_ = inverse(to_rational(datum_.cartan));
  std::set<std::vector<int>> given(roots.begin(), roots.end());
  bool ok = given.size() == roots.size();
  for (int i = 0; i < n && ok; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    ok = given.count(e) > 0;
  }
  for (const auto& beta : roots) {
    if (!ok) break;
    if (static_cast<int>(beta.size()) != n) {
      ok = false;
      break;
    }
    for (int i = 0; i < n && ok; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += beta[j] * datum_.cartan[i][j];
      auto img = beta;
      img[i] -= p;
      ok = given.count(img) > 0;
    }
  }
  if (!ok) throw InvalidInput("root list is not closed under the simple reflections of this Cartan matrix");
  install_roots(std::move(roots));
}

void RootSystem::install_roots(std::vector<std::vector<int>> found)
{
  const int n = rank();
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  for (auto& s : found) {
    Root r;
    r.simple = s;
    r.weight = from_simple(s);
    int norm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm += s[i] * s[j] * datum_.symmetrizer[i] * datum_.cartan[i][j];
    r.norm2 = norm;
    root_index_[s] = roots_.size();
    if (r.positive()) positive_.push_back(roots_.size());
    roots_.push_back(std::move(r));
  }
}

std::optional<std::size_t> RootSystem::find_root(const std::vector<int>& simple) const
{
  auto it = root_index_.find(simple);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

Weight RootSystem::fundamental(int i) const
{
  Weight w = zero();
  w[i] = 1;
  return w;
}

Weight RootSystem::simple_root(int i) const
{
  Weight w = zero();
  for (int k = 0; k < rank(); ++k) w[k] = datum_.cartan[k][i];
  return w;
}

Weight RootSystem::rho() const
{
  Weight w = zero();
  for (int k = 0; k < rank(); ++k) w[k] = 1;
  return w;
}

RatVector RootSystem::to_simple(const Weight& w) const { return matvec(cartan_inv_, w.coords()); }

Weight RootSystem::from_simple(const RatVector& v) const
{
  Weight w = zero();
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) w[k] += Rational(datum_.cartan[k][j]) * v[j];
  return w;
}

Weight RootSystem::from_simple(const std::vector<int>& v) const
{
  Weight w = zero();
  for (int k = 0; k < rank(); ++k) {
    Integer s = 0;
    for (int j = 0; j < rank(); ++j) s += datum_.cartan[k][j] * v[j];
    w[k] = s;
  }
  return w;
}

Rational RootSystem::form(const Weight& a, const Weight& b) const
{
  RatVector r = to_simple(b);
  Rational s = 0;
  for (int j = 0; j < rank(); ++j) s += r[j] * Rational(datum_.symmetrizer[j]) * a[j];
  return s;
}

Rational RootSystem::pairing(const Weight& w, const Weight& beta) const
{
  Rational nb = form(beta, beta);
  if (nb == 0) throw std::invalid_argument("pairing with the zero vector");
  return 2 * form(w, beta) / nb;
}

Rational RootSystem::pairing(const Weight& w, const Root& beta) const
{
  Rational s = 0;
  for (int j = 0; j < rank(); ++j)
    if (beta.simple[j] != 0) s += Rational(beta.simple[j] * datum_.symmetrizer[j]) * w[j];
  return 2 * s / Rational(beta.norm2);
}

Weight RootSystem::reflect(const Weight& w, int i) const
{
  Weight out = w;
  const Rational p = w[i];
  if (p == 0) return out;
  for (int k = 0; k < rank(); ++k) out[k] -= p * Rational(datum_.cartan[k][i]);
  return out;
}

Weight RootSystem::reflect(const Weight& w, const Weight& beta) const
{
  return w - pairing(w, beta) * beta;
}

WeylElement RootSystem::identity() const
{
  WeylElement e;
  e.n_ = rank();
  e.matrix_.assign(rank() * rank(), 0);
  for (int i = 0; i < rank(); ++i) e.matrix_[i * rank() + i] = 1;
  return e;
}

WeylElement RootSystem::from_matrix(std::vector<int> matrix) const
{
  const int n = rank();
  WeylElement w;
  w.n_ = n;
  w.matrix_ = std::move(matrix);
  // w(rho) determines w; greedy smallest left descent gives the lex-least
  // reduced word.
  RatVector rho_simple = to_simple(rho());
  RatVector img(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) img[i] += Rational(w.matrix_[i * n + j]) * rho_simple[j];
  Weight x = from_simple(img);
  for (;;) {
    int i = 0;
    while (i < n && x[i] >= 0) ++i;
    if (i == n) break;
    w.word_.push_back(i);
    x = reflect(x, i);
  }
  return w;
}

WeylElement RootSystem::element(const std::vector<int>& word) const
{
  const int n = rank();
  std::vector<int> m = identity().matrix_;
  for (int s : word) {
    if (s < 0 || s >= n) throw InvalidInput("reflection index out of range");
    // m <- m * s_s; column j of s_s is e_j - C_sj e_s.
    std::vector<int> out = m;
    for (int j = 0; j < n; ++j) {
      int c = datum_.cartan[s][j];
      if (c == 0) continue;
      for (int r = 0; r < n; ++r) out[r * n + j] -= c * m[r * n + s];
    }
    m = std::move(out);
  }
  return from_matrix(std::move(m));
}

WeylElement RootSystem::compose(const WeylElement& a, const WeylElement& b) const
{
  const int n = rank();
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int x = a.matrix_[i * n + k];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) m[i * n + j] += x * b.matrix_[k * n + j];
    }
  return from_matrix(std::move(m));
}

Weight RootSystem::apply(const WeylElement& w, const Weight& x) const
{
  Weight out = x;
  for (auto it = w.word_.rbegin(); it != w.word_.rend(); ++it) out = reflect(out, *it);
  return out;
}

std::vector<int> RootSystem::apply_simple(const WeylElement& w, const std::vector<int>& simple) const
{
  const int n = rank();
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += w.matrix_[i * n + j] * simple[j];
  return out;
}

int RootSystem::inversion_count(const WeylElement& w) const
{
  int count = 0;
  for (std::size_t idx : positive_) {
    auto img = apply_simple(w, roots_[idx].simple);
    for (int x : img)
      if (x != 0) {
        if (x < 0) ++count;
        break;
      }
  }
  return count;
}

std::vector<WeylElement> RootSystem::weyl_group(std::size_t cap) const
{
  std::vector<WeylElement> out{identity()};
  std::set<std::vector<int>> seen{out[0].matrix_};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rank(); ++i) {
      std::vector<int> word = out[head].word_;
      word.push_back(i);
      WeylElement w = element(word);
      if (seen.insert(w.matrix_).second) {
        if (out.size() >= cap) throw ResourceLimit("Weyl group enumeration exceeded cap of " + std::to_string(cap));
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

std::pair<Weight, WeylElement> RootSystem::dominant_representative(const Weight& eta) const
{
  Weight x = eta;
  std::vector<int> applied;
  for (;;) {
    int i = 0;
    while (i < rank() && x[i] >= 0) ++i;
    if (i == rank()) break;
    applied.push_back(i);
    x = reflect(x, i);
  }
  std::reverse(applied.begin(), applied.end());
  return {x, element(applied)};
}

Weight RootSystem::dominant_of(const Weight& eta) const
{
  Weight x = eta;
  for (;;) {
    int i = 0;
    while (i < rank() && x[i] >= 0) ++i;
    if (i == rank()) return x;
    x = reflect(x, i);
  }
}

WeylElement RootSystem::longest_element(const std::vector<int>& subset) const
{
  for (int j : subset)
    if (j < 0 || j >= rank()) throw InvalidInput("longest_element: index out of range");
  std::vector<int> word;
  for (;;) {
    WeylElement w = element(word);
    bool extended = false;
    for (int j : subset) {
      // w(alpha_j) > 0 iff column j has a positive entry.
      bool pos = false;
      for (int i = 0; i < rank(); ++i)
        if (w.entry(i, j) != 0) {
          pos = w.entry(i, j) > 0;
          if (pos) break;
        }
      if (pos) {
        word.push_back(j);
        extended = true;
        break;
      }
    }
    if (!extended) return w;
  }
}

std::vector<Weight> RootSystem::orbit(const Weight& x) const
{
  std::vector<Weight> out{x};
  std::set<Weight> seen{x};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int i = 0; i < rank(); ++i) {
      Weight y = reflect(out[head], i);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  return out;
}

void RootSystem::require_dominant_integral(const Weight& w, const char* what) const
{
  if (static_cast<int>(w.rank()) != rank())
    throw InvalidInput(std::string(what) + ": weight has rank " + std::to_string(w.rank()) +
                       ", expected " + std::to_string(rank()));
  if (!w.is_integral() || !w.is_dominant())
    throw InvalidInput(std::string(what) + ": weight " + w.str() + " is not dominant integral");
}

Integer RootSystem::weyl_dim(const Weight& lambda) const
{
  require_dominant_integral(lambda, "weyl_dim");
  Weight lr = lambda + rho();
  Rational dim = 1;
  for (std::size_t idx : positive_) dim *= pairing(lr, roots_[idx]) / pairing(rho(), roots_[idx]);
  return to_integer(dim);
}

Rational RootSystem::height(const Weight& w) const
{
  Rational h = 0;
  for (const auto& q : to_simple(w)) h += q;
  return h;
}

std::vector<Weight> saturate(const RootSystem& rs, const Weight& top,
                             std::span<const Weight> positive_roots)
{
  std::vector<Weight> out{top};
  std::set<Weight> seen{top};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Weight x = out[head];
    for (const Weight& beta : positive_roots) {
      Rational p = rs.pairing(x, beta);
      if (!is_integral(p)) throw std::domain_error("saturate: non-integral pairing " + x.str());
      Integer k = p.numerator();
      Weight step = k > 0 ? -beta : beta;
      Weight y = x;
      for (Integer s = 0; s < std::abs(k); ++s) {
        y += step;
        if (seen.insert(y).second) out.push_back(y);
      }
    }
  }
  return out;
}

Character RootSystem::dominant_character(const Weight& lambda) const
{
  require_dominant_integral(lambda, "dominant_character");
  std::vector<Weight> roots_w;
  for (std::size_t idx : positive_) roots_w.push_back(roots_[idx].weight);
  std::vector<Weight> support = saturate(*this, lambda, roots_w);
  std::set<Weight> in_support(support.begin(), support.end());

  std::vector<Weight> dominant;
  for (auto& w : support)
    if (w.is_dominant()) dominant.push_back(w);
  std::vector<std::pair<Rational, Weight>> order;
  for (auto& w : dominant) order.emplace_back(height(w), w);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  Character mult;
  const Weight lr = lambda + rho();
  const Rational top = form(lr, lr);
  for (const auto& [h, mu] : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational num = 0;
    for (std::size_t idx : positive_) {
      const Root& beta = roots_[idx];
      Weight x = mu + beta.weight;
      while (in_support.count(x)) {
        num += Rational(mult.at(dominant_of(x))) * form(x, beta.weight);
        x += beta.weight;
      }
    }
    const Weight mr = mu + rho();
    Rational m = 2 * num / (top - form(mr, mr));
    mult[mu] = to_integer(m);
  }
  return mult;
}

Character RootSystem::character(const Weight& lambda) const
{
  Character out;
  for (const auto& [mu, m] : dominant_character(lambda))
    for (auto& w : orbit(mu)) out[w] = m;
  return out;
}

Character character_product(const Character& a, const Character& b)
{
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) out[wa + wb] += ma * mb;
  return out;
}

Integer character_dimension(const Character& c)
{
  Integer d = 0;
  for (const auto& [w, m] : c) d += m;
  return d;
}

std::map<Weight, Integer> RootSystem::char_decompose_product(const Weight& lambda, const Weight& mu) const
{
  require_dominant_integral(lambda, "char_decompose_product");
  require_dominant_integral(mu, "char_decompose_product");
  // Only dominant weights of the product are needed: characters are
  // W-invariant, so the dominant part determines the decomposition.
  Character a = character(lambda);
  Character b = character(mu);
  Character rest;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      Weight s = wa + wb;
      if (s.is_dominant()) rest[s] += ma * mb;
    }

  std::map<Weight, Integer> out;
  while (!rest.empty()) {
    auto top = rest.begin();
    Rational best = height(top->first);
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      Rational h = height(it->first);
      if (h > best) {
        best = h;
        top = it;
      }
    }
    const Weight nu = top->first;
    const Integer c = top->second;
    if (c < 0) throw VerificationFailure("char_decompose_product: negative multiplicity at " + nu.str());
    out[nu] = c;
    for (const auto& [w, m] : dominant_character(nu)) {
      auto it = rest.find(w);
      if (it == rest.end()) throw VerificationFailure("char_decompose_product: missing weight " + w.str());
      it->second -= c * m;
      if (it->second == 0) rest.erase(it);
    }
    for (auto it = rest.begin(); it != rest.end();)
      it = it->second == 0 ? rest.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace symmcomb
