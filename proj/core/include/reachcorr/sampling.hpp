#pragma once

#include <cstdint>

#include "reachcorr/oriented_graph.hpp"
#include "reachcorr/rational.hpp"

namespace reachcorr {

/// 64-bit seed for the deterministic samplers.
struct Seed {
  std::uint64_t value = 0;
};

/// SplitMix64 (Steele/Lea/Vigna): state advances by 0x9E3779B97F4A7C15 per
/// draw, output is mixed with the 30/27/31 shift constants. The exact output
/// sequence is part of the sampler contract below and must stay stable
/// across platforms and versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Seed of the derived stream for sample or worker `index`:
/// one SplitMix64 output of state (seed XOR (index + 1) * 0x9E3779B97F4A7C15).
/// Fixed rule so that partitioned runs are schedule independent.
std::uint64_t derive_stream_seed(Seed seed, std::uint64_t index);

/// Uniform integer in [0, bound), bound >= 1, by rejection: a 64-bit draw w
/// is accepted iff w < bound * floor((2^64 - 1) / bound); the result is
/// w % bound.
std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound);

/// Exact Bernoulli(num/den) for a canonical rational p in [0, 1]: draws a
/// uniform integer below den by the rejection rule above (chunked through
/// 64-bit draws, most significant first, when den needs more than 64 bits)
/// and reports whether it is below num. No floating point is involved.
bool bernoulli(SplitMix64& rng, const Rational& p);

/// Random tournament: every pair independently Forward or Backward with
/// probability 1/2. Stream layout: one draw per pair in canonical pair
/// order; bit 0 clear means Forward.
OrientedGraph sample_tournament(int n, Seed seed);

/// Randomly oriented G(n,p): each pair is Absent with probability 1-p and
/// otherwise carries an edge whose direction is fair. Stream layout, per
/// pair in canonical order: first the Bernoulli(p) draws for existence,
/// then, if present, one direction draw (bit 0 clear means Forward).
OrientedGraph sample_gnp_oriented(int n, const Rational& p, Seed seed);

/// Randomly oriented G(n,m): a uniform m-subset of pairs carries edges with
/// fair independent directions. Stream layout: m bounded-uniform draws for a
/// partial Fisher-Yates pass over the pair indices (step i swaps position i
/// with i + uniform_below(N - i)), then one direction draw per selected pair
/// in increasing pair-index order.
OrientedGraph sample_gnm_oriented(int n, long long m, Seed seed);

}  // namespace reachcorr
