#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "reachcorr/atoms.hpp"
#include "reachcorr/pascal.hpp"
#include "reachcorr/poly.hpp"
#include "reachcorr/rational.hpp"

namespace reachcorr {

/// Shape of the event {out-cluster of t equals a fixed set T, in-cluster of
/// a equals a fixed set A} in a randomly oriented G(n,p):
///   out_size = |T|, in_size = |A|, outside = |[n] \ (T u A)|.
/// The overlap |T n A| is determined by the other four numbers. Any common
/// vertex forces both a and t into the intersection, so the overlap can
/// never be 1.
struct ClusterPairKey {
  int n = 0;
  int out_size = 0;
  int in_size = 0;
  int outside = 0;

  int overlap() const { return out_size + in_size - (n - outside); }
  bool valid() const {
    if (n < 2 || out_size < 1 || in_size < 1 || outside < 0) return false;
    const int united = n - outside;
    if (united < out_size || united < in_size) return false;
    const int j = overlap();
    return j >= 0 && j != 1;
  }

  friend bool operator==(const ClusterPairKey&, const ClusterPairKey&) = default;
};

/// Which orientation of the out/in symmetry the memo table stores. The
/// default keeps out_size <= in_size. The flipped preference computes every
/// entry it can through the mirrored recursion route instead; it exists so
/// tests can check the symmetry by two independent computations.
enum class KeyOrientation { OutSmall, InSmall };

/// Exact engine for cluster probabilities and the reachability correlation
/// in randomly oriented G(n,p).
///
/// The Value parameter selects symbolic polynomials in p (Poly) or exact
/// rational arithmetic at one fixed p (Rational); both instantiations run
/// the same recursion code. All tables are filled by a single-threaded
/// bottom-up pass over n and are never mutated afterwards, so a prepared
/// engine can be shared read-only across threads.
template <class Value>
class CorrelationEngine {
 public:
  explicit CorrelationEngine(EdgeAtoms<Value> atoms, KeyOrientation orientation = KeyOrientation::OutSmall);

  /// Probability that the out-cluster of a fixed vertex equals a fixed
  /// k-subset containing it; 1 <= k <= n.
  Value out_cluster_set_prob(int n, int k);

  /// Probability that the out-cluster of t and the in-cluster of a equal
  /// fixed sets of the key's shape (a != t). Throws on invalid keys.
  const Value& cluster_pair_prob(const ClusterPairKey& key);

  /// P(a does not reach s) for two fixed distinct vertices; n >= 2.
  Value marginal_not_reach(int n);

  /// P(a does not reach s and t does not reach b) for four fixed distinct
  /// vertices; n >= 4.
  Value joint_not_reach(int n);

  /// joint_not_reach - marginal_not_reach^2; n >= 4.
  Value covariance(int n);

  /// Builds every table through level n (cluster-pair pass implies the
  /// out-cluster pass).
  void prepare(int n);
  void prepare_marginal(int n);

 private:
  const Value& diagonal(int k);           // out_cluster_set_prob(k, k)
  const Value& y_power(int exponent);
  const Value& q_power(int exponent);
  ClusterPairKey oriented(ClusterPairKey key) const;
  static std::uint64_t pack(const ClusterPairKey& key);
  const Value& stored(const ClusterPairKey& key) const;
  const Value& pair_value_level(const ClusterPairKey& key);
  void build_level(int m);
  Value zero_outside_value(int m, int out_size, int in_size);
  Value whole_vertex_set_value(int m);    // the level-m normalization entry
  Value reduce_outside(const ClusterPairKey& key);

  EdgeAtoms<Value> atoms_;
  Value one_;
  KeyOrientation orientation_;
  PascalTriangle binomial_;
  std::vector<Value> diagonal_;           // diagonal_[k], index 0 unused
  std::vector<Value> y_powers_;
  std::vector<Value> q_powers_;
  std::unordered_map<std::uint64_t, Value> pairs_;
  int built_pairs_ = 1;
};

using SymbolicEngine = CorrelationEngine<Poly>;
using PointEngine = CorrelationEngine<Rational>;

SymbolicEngine make_symbolic_engine(KeyOrientation orientation = KeyOrientation::OutSmall);
PointEngine make_point_engine(const Rational& p, KeyOrientation orientation = KeyOrientation::OutSmall);

/// (joint - marginal^2) / joint at an exact p in [0, 1]; n >= 4. The joint
/// probability is positive for every p < 1 (the empty graph contributes
/// (1-p)^C(n,2)) and stays positive at p = 1, so the quotient is total.
Rational relative_covariance(int n, const Rational& p);

enum class Method { ExactRecursion, Oracle, MonteCarlo };

/// Correlation quantities evaluated at one (n, p) point. The two marginal
/// events have equal probability by symmetry of the model.
struct CorrelationReport {
  int n = 0;
  Rational p;
  Rational p_a;
  Rational p_b;
  Rational p_joint;
  Rational covariance;
  Rational relative_covariance;
  Method method = Method::ExactRecursion;
};

/// Derives the covariance fields from the marginal and joint probabilities.
CorrelationReport build_report(int n, Rational p, Rational p_marginal, Rational p_joint, Method method);

}  // namespace reachcorr
