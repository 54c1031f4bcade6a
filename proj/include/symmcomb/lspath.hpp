#pragma once

// Piecewise-linear paths, Littelmann root operators, the poset with bonds
// on W^lambda and Lakshmibai-Seshadri paths.

#include "symmcomb/cartan.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace symmcomb {

struct Segment {
  Weight velocity;
  Rational duration;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A path pi: [0,1] -> Lambda (x) Q starting at 0, stored as segments with
/// constant velocity. Always in canonical form: no zero durations and no
/// two adjacent segments with equal velocity.
class Path {
 public:
  Path() = default;
  /// Durations must be non-negative and sum to 1.
  explicit Path(std::vector<Segment> segments);

  static Path straight(const Weight& endpoint);
  static Path zero(std::size_t rank);

  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t rank() const { return segs_.empty() ? 0 : segs_.front().velocity.rank(); }

  Weight at(const Rational& t) const;
  Weight endpoint() const;
  /// Positions at the end of each segment (pi(0) = 0 is omitted).
  std::vector<Weight> breakpoints() const;
  /// Start times of each segment followed by 1.
  std::vector<Rational> times() const;

  friend bool operator==(const Path& a, const Path& b) { return a.segs_ == b.segs_; }
  friend bool operator<(const Path& a, const Path& b);

  std::string str() const;

 private:
  std::vector<Segment> segs_;
};

/// f_i (lower) and e_i (raise); nullopt where the operator is undefined.
std::optional<Path> lower(const RootSystem& rs, const Path& p, int i);
std::optional<Path> raise(const RootSystem& rs, const Path& p, int i);

/// pi_1 * ... * pi_u, each factor run at speed u on an interval of length 1/u.
Path concatenate(const std::vector<Path>& parts, std::size_t rank);
/// Inverse of concatenate for `parts` equal factors.
std::vector<Path> split(const Path& p, std::size_t parts);

/// Applies raising operators (smallest index first) until none applies.
Path raise_fully(const RootSystem& rs, Path p);

struct CrystalEdge {
  std::size_t from;
  int color;  // simple root index
  std::size_t to;

  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

struct Crystal {
  std::vector<Path> nodes;  // breadth-first order from the seed
  std::vector<CrystalEdge> edges;  // f_color(nodes[from]) = nodes[to]
};

inline constexpr std::size_t kDefaultCrystalCap = 100'000;

/// Closure of `seed` under all e_i and f_i (or only f_i when
/// `lowering_only`). Throws ResourceLimit past `cap` nodes.
Crystal crystal_generate(const RootSystem& rs, const Path& seed, std::size_t cap = kDefaultCrystalCap,
                         bool lowering_only = false);

/// W^lambda with Bruhat order and bonds.
struct BondedPoset {
  Weight lambda;
  std::vector<Weight> elements;       // tau(lambda), sorted by alphabet order of tau
  std::vector<WeylElement> reps;      // minimal coset representatives tau
  std::vector<int> lengths;
  /// Covers (i, j, bond): elements[j] = s_beta elements[i] covers elements[i].
  std::vector<std::tuple<int, int, Integer>> covers;
  /// bond[i][j] for i < j in Bruhat order (the gcd along any maximal chain);
  /// 0 when not comparable (including i == j).
  std::vector<std::vector<Integer>> bond;
  Integer n_lambda = 1;

  std::size_t size() const { return elements.size(); }
  bool less(int i, int j) const { return bond[i][j] != 0; }
  std::optional<int> index_of(const Weight& w) const;
};

/// Throws InvalidInput for lambda = 0 or non-dominant / non-integral lambda.
/// Throws VerificationFailure if the gcd of bonds depends on the chain.
BondedPoset bonds_build(const RootSystem& rs, const Weight& lambda);

/// Gcd of bonds along every maximal chain from i up to j (one value per
/// distinct gcd found); used to certify chain independence.
std::vector<Integer> chain_gcds(const BondedPoset& poset, int i, int j);

/// (tau_1 < ... < tau_u; 0 = a_0 < a_1 < ... < a_u = 1), tau's as poset indices.
struct LSPath {
  std::vector<int> chain;
  std::vector<Rational> a;  // size chain.size() + 1

  friend bool operator==(const LSPath&, const LSPath&) = default;
  friend bool operator<(const LSPath& x, const LSPath& y);
};

/// Segments run from the Bruhat-largest tau_u down to tau_1: segment k has
/// velocity tau_{u-k}(lambda) and duration a_{u-k} - a_{u-k-1}.
Path realize(const BondedPoset& poset, const LSPath& pi);

/// All LS paths of shape poset.lambda, sorted.
std::vector<LSPath> ls_paths(const BondedPoset& poset);

/// Inverse of realize; nullopt when p is not an LS path of this shape.
std::optional<LSPath> recognize(const BondedPoset& poset, const Path& p);

/// w(pi) = tau_1^{N(a_1 - a_0)} ... tau_u^{N(a_u - a_{u-1})} as poset indices.
std::vector<int> word(const BondedPoset& poset, const LSPath& pi);

/// LS paths of one shape with realized paths and a lookup table. Handles
/// lambda = 0 (the constant path).
class PathModel {
 public:
  PathModel(const RootSystem& rs, const Weight& lambda);

  const Weight& shape() const { return poset_.lambda; }
  const BondedPoset& poset() const { return poset_; }
  const std::vector<LSPath>& paths() const { return paths_; }
  const std::vector<Path>& realized() const { return realized_; }
  std::size_t size() const { return paths_.size(); }
  std::optional<std::size_t> index_of(const Path& p) const;
  /// Index of pi_lambda, the straight path.
  std::size_t head() const { return head_; }

 private:
  BondedPoset poset_;
  std::vector<LSPath> paths_;
  std::vector<Path> realized_;
  std::map<Path, std::size_t> lookup_;
  std::size_t head_ = 0;
};

}  // namespace symmcomb
