#include "reachcorr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace reachcorr {

namespace {

[[noreturn]] void bad_rational(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

Rational make_rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational value(std::move(numerator), std::move(denominator));
  value.canonicalize();
  return value;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) bad_rational(text);

  const auto slash = text.find('/');
  const auto dot = text.find('.');
  if (slash != std::string_view::npos && dot != std::string_view::npos) bad_rational(text);

  if (dot != std::string_view::npos) {
    // Decimal literal: integer part and fraction digits over a power of ten.
    std::string_view head = text.substr(0, dot);
    std::string_view tail = text.substr(dot + 1);
    if (tail.empty()) bad_rational(text);
    bool negative = false;
    if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
      negative = head.front() == '-';
      head.remove_prefix(1);
    }
    std::string digits;
    digits.reserve(head.size() + tail.size());
    for (char c : head) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad_rational(text);
      digits.push_back(c);
    }
    for (char c : tail) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad_rational(text);
      digits.push_back(c);
    }
    if (digits.empty()) bad_rational(text);
    BigInt numerator(digits, 10);
    if (negative) numerator = -numerator;
    BigInt denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, tail.size());
    return make_rational(std::move(numerator), std::move(denominator));
  }

  Rational value;
  if (mpq_set_str(value.get_mpq_t(), std::string(text).c_str(), 10) != 0) bad_rational(text);
  if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0) bad_rational(text);
  value.canonicalize();
  return value;
}

std::string rational_repr(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(mpq_numref(result.get_mpq_t()), mpq_numref(base.get_mpq_t()), exponent);
  mpz_pow_ui(mpq_denref(result.get_mpq_t()), mpq_denref(base.get_mpq_t()), exponent);
  // Powers of a canonical rational are canonical already.
  return result;
}

bool is_probability(const Rational& value) { return value >= 0 && value <= 1; }

}  // namespace reachcorr
