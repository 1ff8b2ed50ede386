#pragma once

#include <utility>

#include "reachcorr/atoms.hpp"
#include "reachcorr/estimate.hpp"
#include "reachcorr/poly.hpp"
#include "reachcorr/rational.hpp"
#include "reachcorr/sampling.hpp"

namespace reachcorr {

/// The reachability events with the fixed labels s=0, a=1, t=2, b=3:
/// NotReach is {s does not reach a}, JointNotReach adds {t does not reach b}.
enum class EventKind { NotReach, JointNotReach };

/// Minimum vertex count an event refers to (2 or 4).
int event_min_vertices(EventKind event);

/// Exact event probability over all 2^{n(n-1)/2} tournaments; 2 <= n <= 6.
Rational oracle_tournament(int n, EventKind event);

/// Exact event probability polynomial over all 3^{n(n-1)/2} pair-state
/// assignments, each weighted by its product of atoms; 2 <= n <= 5.
Poly oracle_annealed_poly(int n, EventKind event);

/// Same enumeration with the atoms evaluated at a fixed p; 2 <= n <= 6.
/// The enumeration is partitioned into disjoint leading-state ranges when
/// threads > 1; exact partial sums make the result schedule independent.
Rational oracle_annealed_numeric(int n, EventKind event, const Rational& p, int threads = 1);

/// Both event probabilities from one enumeration pass: (marginal, joint).
/// Requires n >= 4; same budget as oracle_annealed_numeric.
std::pair<Rational, Rational> oracle_annealed_marginal_and_joint(int n, const Rational& p, int threads = 1);

/// Exact quenched covariance: the covariance of the two events over edge
/// orientations is computed for every edge subset and averaged under the
/// G(n,p) subset weights; 2 <= n <= 5.
Rational oracle_quenched(int n, const Rational& p);

/// Monte Carlo over graphs with exact per-graph orientation enumeration;
/// returns mean and standard error of the per-graph covariance. n <= 6.
EstimateCI quenched_mc(int n, const Rational& p, long long graph_samples, Seed seed);

}  // namespace reachcorr
