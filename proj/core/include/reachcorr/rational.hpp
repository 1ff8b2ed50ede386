#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace reachcorr {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (GMP keeps arithmetic results canonical; the factory
/// functions below canonicalize raw numerator/denominator input).
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(BigInt numerator, BigInt denominator);

/// Parses "3", "-2/7", or a decimal literal such as "0.05" (exactly 1/20).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always renders an explicit denominator: "0/1", "-1/2", "3/1".
std::string rational_repr(const Rational& value);

Rational rational_pow(const Rational& base, unsigned long exponent);

bool is_probability(const Rational& value);  // 0 <= value <= 1

}  // namespace reachcorr
