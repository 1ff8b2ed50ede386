#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reachcorr/rational.hpp"

namespace reachcorr {

/// Dense univariate polynomial in the edge probability p with exact rational
/// coefficients, index i holding the coefficient of p^i.
///
/// Canonical form: the zero polynomial stores no coefficients at all, and any
/// other polynomial keeps a nonzero leading coefficient, so equality is plain
/// coefficient comparison. Values are immutable in spirit: every operation
/// returns a fresh polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant);
  explicit Poly(std::vector<Rational> coefficients);

  static Poly zero() { return Poly(); }
  static Poly one();
  static Poly variable();  // p

  bool is_zero() const { return coefficients_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Coefficient of p^index, zero outside the stored range.
  Rational coefficient(int index) const;

  /// Exact Horner evaluation.
  Rational operator()(const Rational& point) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Poly& lhs, const Rational& scalar);
  friend Poly operator*(const Rational& scalar, const Poly& rhs) { return rhs * scalar; }
  friend Poly operator*(const Poly& lhs, const BigInt& scalar);
  Poly operator-() const;

  /// Power by repeated squaring; pow(0) is the constant 1.
  Poly pow(unsigned long exponent) const;

  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

  /// JSON array of coefficient strings "num/den", lowest index first.
  std::string to_json() const;
  static Poly from_json(std::string_view text);

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

}  // namespace reachcorr
