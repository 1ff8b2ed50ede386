#include "reachcorr/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace reachcorr {

std::uint64_t derive_stream_seed(Seed seed, std::uint64_t index) {
  SplitMix64 mixer(seed.value ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
  return mixer.next();
}

std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs bound >= 1");
  if (bound == 1) return 0;
  // Largest multiple of bound not exceeding 2^64 - 1.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  while (true) {
    const std::uint64_t draw = rng.next();
    if (draw < limit) return draw % bound;
  }
}

namespace {

bool bernoulli_big(SplitMix64& rng, const BigInt& num, const BigInt& den) {
  const std::size_t chunks = (mpz_sizeinbase(den.get_mpz_t(), 2) + 63) / 64;
  BigInt radix;
  mpz_ui_pow_ui(radix.get_mpz_t(), 2, 64 * chunks);
  const BigInt limit = den * (radix / den);
  while (true) {
    BigInt draw(0);
    for (std::size_t i = 0; i < chunks; ++i) {
      mpz_mul_2exp(draw.get_mpz_t(), draw.get_mpz_t(), 64);
      draw += BigInt(rng.next());
    }
    if (draw < limit) return draw % den < num;
  }
}

}  // namespace

bool bernoulli(SplitMix64& rng, const Rational& p) {
  if (!is_probability(p)) throw std::domain_error("Bernoulli parameter must lie in [0, 1]");
  const BigInt& num = p.get_num();
  const BigInt& den = p.get_den();
  if (!den.fits_ulong_p()) return bernoulli_big(rng, num, den);
  const std::uint64_t value = uniform_below(rng, den.get_ui());
  return value < num.get_ui();
}

OrientedGraph sample_tournament(int n, Seed seed) {
  OrientedGraph graph(n);
  SplitMix64 rng(seed.value);
  std::vector<EdgeState> states(static_cast<std::size_t>(pair_count(n)));
  for (auto& s : states) {
    s = (rng.next() & 1ULL) == 0 ? EdgeState::Forward : EdgeState::Backward;
  }
  return OrientedGraph(n, std::move(states));
}

OrientedGraph sample_gnp_oriented(int n, const Rational& p, Seed seed) {
  if (!is_probability(p)) throw std::domain_error("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed.value);
  std::vector<EdgeState> states(static_cast<std::size_t>(pair_count(n)));
  for (auto& s : states) {
    if (bernoulli(rng, p)) {
      s = (rng.next() & 1ULL) == 0 ? EdgeState::Forward : EdgeState::Backward;
    } else {
      s = EdgeState::Absent;
    }
  }
  return OrientedGraph(n, std::move(states));
}

OrientedGraph sample_gnm_oriented(int n, long long m, Seed seed) {
  const long long pairs = pair_count(n);
  if (m < 0 || m > pairs) throw std::invalid_argument("edge count must lie in [0, n(n-1)/2]");
  SplitMix64 rng(seed.value);

  std::vector<int> order(static_cast<std::size_t>(pairs));
  std::iota(order.begin(), order.end(), 0);
  for (long long i = 0; i < m; ++i) {
    const std::uint64_t offset = uniform_below(rng, static_cast<std::uint64_t>(pairs - i));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i + static_cast<long long>(offset))]);
  }
  std::vector<int> selected(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
  std::sort(selected.begin(), selected.end());

  std::vector<EdgeState> states(static_cast<std::size_t>(pairs), EdgeState::Absent);
  for (int index : selected) {
    states[static_cast<std::size_t>(index)] =
        (rng.next() & 1ULL) == 0 ? EdgeState::Forward : EdgeState::Backward;
  }
  return OrientedGraph(n, std::move(states));
}

}  // namespace reachcorr
