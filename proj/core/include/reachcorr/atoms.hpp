#pragma once

#include "reachcorr/poly.hpp"
#include "reachcorr/rational.hpp"

namespace reachcorr {

/// Per-pair state probabilities of the randomly oriented G(n,p):
///   x = p/2    the pair carries an edge with one fixed direction,
///   y = 1-p/2  the pair does not carry that directed edge,
///   q = 1-p    the pair carries no edge at all.
/// x + y = 1 and x + x + q = 1 hold exactly.
template <class Value>
struct EdgeAtoms {
  Value x;
  Value y;
  Value q;
};

/// The multiplicative unit of a value type usable as an EdgeAtoms entry.
template <class Value>
Value unit_value();
template <>
inline Poly unit_value<Poly>() {
  return Poly::one();
}
template <>
inline Rational unit_value<Rational>() {
  return Rational(1);
}

/// Atoms as degree-<=1 polynomials in p.
inline EdgeAtoms<Poly> symbolic_atoms() {
  return {Poly({Rational(0), make_rational(1, 2)}),
          Poly({Rational(1), make_rational(-1, 2)}),
          Poly({Rational(1), Rational(-1)})};
}

/// Atoms evaluated at a fixed p in [0,1]; throws std::domain_error otherwise.
inline EdgeAtoms<Rational> point_atoms(const Rational& p) {
  if (!is_probability(p)) throw std::domain_error("edge probability must lie in [0, 1]");
  Rational x = p / 2;
  return {x, 1 - x, 1 - p};
}

}  // namespace reachcorr
