#include "reachcorr/recursion.hpp"

#include <stdexcept>
#include <utility>

namespace reachcorr {

namespace {

// True iff the zero-outside entry (n, out_size, in_size) can be computed in
// this orientation: the pivot-removal recursions take the pivot from the
// in-cluster set, which requires a vertex outside the out-cluster set
// (overlap >= 2) or an in-cluster set of at least two vertices (overlap 0).
bool directly_computable(int n, int out_size, int in_size) {
  if (n == 2) return out_size == in_size;
  if (out_size == n && in_size == n) return true;
  const int overlap = out_size + in_size - n;
  if (overlap >= 2) return out_size < n;
  return in_size >= 2;
}

constexpr int kMaxLevel = 4096;

}  // namespace

template <class Value>
CorrelationEngine<Value>::CorrelationEngine(EdgeAtoms<Value> atoms, KeyOrientation orientation)
    : atoms_(std::move(atoms)), one_(unit_value<Value>()), orientation_(orientation) {
  diagonal_.resize(2);
  diagonal_[1] = one_;
  y_powers_.push_back(one_);
  q_powers_.push_back(one_);
}

template <class Value>
std::uint64_t CorrelationEngine<Value>::pack(const ClusterPairKey& key) {
  return (static_cast<std::uint64_t>(key.n) << 48) | (static_cast<std::uint64_t>(key.out_size) << 32) |
         (static_cast<std::uint64_t>(key.in_size) << 16) | static_cast<std::uint64_t>(key.outside);
}

template <class Value>
const Value& CorrelationEngine<Value>::y_power(int exponent) {
  while (static_cast<int>(y_powers_.size()) <= exponent) {
    y_powers_.push_back(y_powers_.back() * atoms_.y);
  }
  return y_powers_[static_cast<std::size_t>(exponent)];
}

template <class Value>
const Value& CorrelationEngine<Value>::q_power(int exponent) {
  while (static_cast<int>(q_powers_.size()) <= exponent) {
    q_powers_.push_back(q_powers_.back() * atoms_.q);
  }
  return q_powers_[static_cast<std::size_t>(exponent)];
}

template <class Value>
const Value& CorrelationEngine<Value>::diagonal(int k) {
  while (static_cast<int>(diagonal_.size()) <= k) {
    const int m = static_cast<int>(diagonal_.size());
    // Complement of the chance that the out-cluster is a proper subset:
    // d(m,m) = 1 - sum_i C(m-1, i-1) d(i,i) y^{i(m-i)}.
    Value sum{};
    for (int i = 1; i < m; ++i) {
      Value term = diagonal_[static_cast<std::size_t>(i)] * binomial_.choose(m - 1, i - 1);
      term = term * y_power(i * (m - i));
      sum += term;
    }
    diagonal_.push_back(one_ - sum);
  }
  return diagonal_[static_cast<std::size_t>(k)];
}

template <class Value>
ClusterPairKey CorrelationEngine<Value>::oriented(ClusterPairKey key) const {
  if (key.out_size == key.in_size) return key;
  const ClusterPairKey swapped{key.n, key.in_size, key.out_size, key.outside};
  if (orientation_ == KeyOrientation::OutSmall) {
    return key.out_size < key.in_size ? key : swapped;
  }
  ClusterPairKey preferred = key.out_size > key.in_size ? key : swapped;
  if (preferred.outside == 0 &&
      !directly_computable(preferred.n, preferred.out_size, preferred.in_size)) {
    return preferred.out_size == key.out_size ? swapped : key;
  }
  return preferred;
}

template <class Value>
const Value& CorrelationEngine<Value>::stored(const ClusterPairKey& key) const {
  const auto it = pairs_.find(pack(key));
  if (it == pairs_.end()) throw std::logic_error("cluster-pair table entry missing");
  return it->second;
}

template <class Value>
Value CorrelationEngine<Value>::reduce_outside(const ClusterPairKey& key) {
  // Every outside vertex must avoid all edges into the overlap, all edges
  // into the rest of the in-cluster set and all edges out of the rest of
  // the out-cluster set.
  const ClusterPairKey inner{key.n - key.outside, key.out_size, key.in_size, 0};
  const int overlap = key.overlap();
  Value value = stored(oriented(inner)) * q_power(key.outside * overlap);
  value = value * y_power(key.outside * (2 * key.n - 2 * key.outside - key.out_size - key.in_size));
  return value;
}

template <class Value>
const Value& CorrelationEngine<Value>::cluster_pair_prob(const ClusterPairKey& key) {
  if (!key.valid()) throw std::invalid_argument("invalid cluster-pair key");
  prepare(key.n);
  return pair_value_level(key);
}

template <class Value>
Value CorrelationEngine<Value>::zero_outside_value(int m, int out_size, int in_size) {
  const int overlap = out_size + in_size - m;
  Value total{};
  if (overlap >= 2) {
    // Peel the vertices whose paths into the in-cluster root all run through
    // one pivot outside the out-cluster set.
    for (int peeled = 1; peeled <= m - out_size; ++peeled) {
      const BigInt& ways = binomial_.choose(m - out_size - 1, peeled - 1);
      if (ways == 0) continue;
      const ClusterPairKey inner{m - peeled, out_size, in_size - peeled, 0};
      Value term = stored(oriented(inner)) * ways;
      term = term * diagonal(peeled);
      term = term * q_power((peeled - 1) * overlap);
      term = term * y_power((peeled - 1) * (2 * m - out_size - in_size - peeled));
      const Value bracket =
          y_power(out_size) - y_power(2 * m - in_size - out_size - peeled) * q_power(overlap);
      term = term * bracket;
      total += term;
    }
  } else {
    // Disjoint clusters covering all of [m]; the pivot keeps at least one
    // edge into what is left of the in-cluster set.
    for (int peeled = 1; peeled <= in_size - 1; ++peeled) {
      const BigInt& ways = binomial_.choose(in_size - 2, peeled - 1);
      if (ways == 0) continue;
      const ClusterPairKey inner{m - peeled, out_size, in_size - peeled, 0};
      Value term = stored(oriented(inner)) * ways;
      term = term * diagonal(peeled);
      term = term * y_power((peeled - 1) * (out_size + in_size - peeled) + out_size);
      term = term * (one_ - y_power(in_size - peeled));
      total += term;
    }
  }
  return total;
}

template <class Value>
Value CorrelationEngine<Value>::whole_vertex_set_value(int m) {
  // The shapes over all (T, A) pairs sum to one; solve for the entry where
  // both clusters are the full vertex set.
  Value total{};
  for (int overlap = 2; overlap <= m - 1; ++overlap) {
    const BigInt& shared = binomial_.choose(m - 2, overlap - 2);
    if (shared == 0) continue;
    for (int out_size = overlap; out_size <= m; ++out_size) {
      const BigInt& outs = binomial_.choose(m - overlap, out_size - overlap);
      if (outs == 0) continue;
      for (int in_size = overlap; in_size <= m - out_size + overlap; ++in_size) {
        const BigInt& ins = binomial_.choose(m - out_size, in_size - overlap);
        if (ins == 0) continue;
        BigInt ways = shared * outs;
        ways *= ins;
        const ClusterPairKey key{m, out_size, in_size, m - in_size - out_size + overlap};
        total += pair_value_level(key) * ways;
      }
    }
  }
  for (int out_size = 1; out_size <= m; ++out_size) {
    const BigInt& outs = binomial_.choose(m - 2, out_size - 1);
    if (outs == 0) continue;
    for (int in_size = 1; in_size <= m - out_size; ++in_size) {
      const BigInt& ins = binomial_.choose(m - out_size - 1, in_size - 1);
      if (ins == 0) continue;
      BigInt ways = outs * ins;
      const ClusterPairKey key{m, out_size, in_size, m - in_size - out_size};
      total += pair_value_level(key) * ways;
    }
  }
  return one_ - total;
}

template <class Value>
const Value& CorrelationEngine<Value>::pair_value_level(const ClusterPairKey& key) {
  const ClusterPairKey canonical = oriented(key);
  const auto it = pairs_.find(pack(canonical));
  if (it != pairs_.end()) return it->second;
  auto [inserted, fresh] = pairs_.emplace(pack(canonical), reduce_outside(canonical));
  (void)fresh;
  return inserted->second;
}

template <class Value>
void CorrelationEngine<Value>::build_level(int m) {
  if (m == 2) {
    pairs_.emplace(pack(ClusterPairKey{2, 1, 1, 0}), atoms_.y);
    pairs_.emplace(pack(ClusterPairKey{2, 2, 2, 0}), atoms_.x);
    return;
  }
  for (int lo = 1; lo <= m; ++lo) {
    for (int hi = lo; hi <= m; ++hi) {
      if (lo == m && hi == m) continue;
      const int overlap = lo + hi - m;
      if (overlap < 0 || overlap == 1) continue;
      const ClusterPairKey key = oriented(ClusterPairKey{m, lo, hi, 0});
      pairs_.emplace(pack(key), zero_outside_value(m, key.out_size, key.in_size));
    }
  }
  pairs_.emplace(pack(ClusterPairKey{m, m, m, 0}), whole_vertex_set_value(m));
}

template <class Value>
void CorrelationEngine<Value>::prepare(int n) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (n > kMaxLevel) throw std::invalid_argument("vertex count beyond supported table size");
  for (int m = built_pairs_ + 1; m <= n; ++m) build_level(m);
  if (n > built_pairs_) built_pairs_ = n;
}

template <class Value>
void CorrelationEngine<Value>::prepare_marginal(int n) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (n > kMaxLevel) throw std::invalid_argument("vertex count beyond supported table size");
  diagonal(n);
}

template <class Value>
Value CorrelationEngine<Value>::out_cluster_set_prob(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("out-cluster size must satisfy 1 <= k <= n");
  prepare_marginal(k);
  if (k == n) return diagonal(k);
  // Fixing the cluster also fixes that no edge may leave it.
  return diagonal(k) * y_power(k * (n - k));
}

template <class Value>
Value CorrelationEngine<Value>::marginal_not_reach(int n) {
  if (n < 2) throw std::invalid_argument("marginal event needs two distinct vertices");
  Value total{};
  for (int k = 1; k <= n - 1; ++k) {
    total += out_cluster_set_prob(n, k) * binomial_.choose(n - 2, k - 1);
  }
  return total;
}

template <class Value>
Value CorrelationEngine<Value>::joint_not_reach(int n) {
  if (n < 4) throw std::invalid_argument("joint event needs four distinct vertices");
  prepare(n);
  Value total{};
  // Overlapping cluster sets: the overlap holds both roots, never the other
  // two labeled vertices; split on whether the second source vertex lies in
  // the out-cluster set.
  for (int overlap = 2; overlap <= n - 2; ++overlap) {
    const BigInt& shared = binomial_.choose(n - 4, overlap - 2);
    if (shared == 0) continue;
    for (int out_size = overlap; out_size <= n - 2; ++out_size) {
      const BigInt& outs = binomial_.choose(n - 2 - overlap, out_size - overlap);
      if (outs == 0) continue;
      for (int in_size = overlap; in_size <= n - out_size + overlap - 1; ++in_size) {
        const BigInt& ins = binomial_.choose(n - out_size - 1, in_size - overlap);
        if (ins == 0) continue;
        BigInt ways = shared * outs;
        ways *= ins;
        const ClusterPairKey key{n, out_size, in_size, n - in_size - out_size + overlap};
        total += pair_value_level(key) * ways;
      }
    }
    for (int out_size = overlap + 1; out_size <= n - 1; ++out_size) {
      const BigInt& outs = binomial_.choose(n - 2 - overlap, out_size - overlap - 1);
      if (outs == 0) continue;
      for (int in_size = overlap; in_size <= n - out_size + overlap; ++in_size) {
        const BigInt& ins = binomial_.choose(n - out_size, in_size - overlap);
        if (ins == 0) continue;
        BigInt ways = shared * outs;
        ways *= ins;
        const ClusterPairKey key{n, out_size, in_size, n - in_size - out_size + overlap};
        total += pair_value_level(key) * ways;
      }
    }
  }
  // Disjoint cluster sets, same split.
  for (int out_size = 1; out_size <= n - 3; ++out_size) {
    const BigInt& outs = binomial_.choose(n - 4, out_size - 1);
    if (outs == 0) continue;
    for (int in_size = 1; in_size <= n - out_size - 1; ++in_size) {
      const BigInt& ins = binomial_.choose(n - out_size - 2, in_size - 1);
      if (ins == 0) continue;
      BigInt ways = outs * ins;
      const ClusterPairKey key{n, out_size, in_size, n - in_size - out_size};
      total += pair_value_level(key) * ways;
    }
  }
  for (int out_size = 2; out_size <= n - 2; ++out_size) {
    const BigInt& outs = binomial_.choose(n - 4, out_size - 2);
    if (outs == 0) continue;
    for (int in_size = 1; in_size <= n - out_size; ++in_size) {
      const BigInt& ins = binomial_.choose(n - out_size - 1, in_size - 1);
      if (ins == 0) continue;
      BigInt ways = outs * ins;
      const ClusterPairKey key{n, out_size, in_size, n - in_size - out_size};
      total += pair_value_level(key) * ways;
    }
  }
  return total;
}

template <class Value>
Value CorrelationEngine<Value>::covariance(int n) {
  const Value marginal = marginal_not_reach(n);
  Value joint = joint_not_reach(n);
  joint -= marginal * marginal;
  return joint;
}

template class CorrelationEngine<Poly>;
template class CorrelationEngine<Rational>;

SymbolicEngine make_symbolic_engine(KeyOrientation orientation) {
  return SymbolicEngine(symbolic_atoms(), orientation);
}

PointEngine make_point_engine(const Rational& p, KeyOrientation orientation) {
  return PointEngine(point_atoms(p), orientation);
}

Rational relative_covariance(int n, const Rational& p) {
  if (n < 4) throw std::invalid_argument("joint event needs four distinct vertices");
  PointEngine engine = make_point_engine(p);
  const Rational marginal = engine.marginal_not_reach(n);
  const Rational joint = engine.joint_not_reach(n);
  if (joint == 0) throw std::logic_error("joint probability vanished");
  return (joint - marginal * marginal) / joint;
}

CorrelationReport build_report(int n, Rational p, Rational p_marginal, Rational p_joint, Method method) {
  if (p_joint == 0) throw std::domain_error("joint probability is zero");
  CorrelationReport report;
  report.n = n;
  report.p = std::move(p);
  report.p_a = p_marginal;
  report.p_b = std::move(p_marginal);
  report.p_joint = std::move(p_joint);
  report.covariance = report.p_joint - report.p_a * report.p_a;
  report.relative_covariance = report.covariance / report.p_joint;
  report.method = method;
  return report;
}

}  // namespace reachcorr
