#pragma once

#include <stdexcept>
#include <vector>

#include "reachcorr/rational.hpp"

namespace reachcorr {

/// Cached Pascal triangle over arbitrary-precision integers.
class PascalTriangle {
 public:
  /// C(n, k); zero for k < 0 or k > n. Rows are grown on demand and never
  /// mutated afterwards.
  const BigInt& choose(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    if (k < 0 || k > n) return zero_;
    while (static_cast<int>(rows_.size()) <= n) {
      const std::size_t m = rows_.size();
      std::vector<BigInt> row(m + 1, BigInt(1));
      for (std::size_t i = 1; i < m; ++i) row[i] = rows_[m - 1][i - 1] + rows_[m - 1][i];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_{0};
};

}  // namespace reachcorr
