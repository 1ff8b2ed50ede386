#include "reachcorr/poly.hpp"

#include "json.hpp"

#include <stdexcept>
#include <utility>

namespace reachcorr {

Poly::Poly(Rational constant) {
  if (constant != 0) coefficients_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

Poly Poly::one() { return Poly(Rational(1)); }

Poly Poly::variable() { return Poly({Rational(0), Rational(1)}); }

Rational Poly::coefficient(int index) const {
  if (index < 0 || index >= static_cast<int>(coefficients_.size())) return Rational(0);
  return coefficients_[static_cast<std::size_t>(index)];
}

Rational Poly::operator()(const Rational& point) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

void Poly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] -= other.coefficients_[i];
  }
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  Poly result;
  result.coefficients_.assign(lhs.coefficients_.size() + rhs.coefficients_.size() - 1, Rational(0));
  Rational scratch;
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      scratch = lhs.coefficients_[i] * rhs.coefficients_[j];
      result.coefficients_[i + j] += scratch;
    }
  }
  result.trim();
  return result;
}

Poly operator*(const Poly& lhs, const Rational& scalar) {
  if (scalar == 0) return Poly();
  Poly result = lhs;
  for (auto& c : result.coefficients_) c *= scalar;
  return result;
}

Poly operator*(const Poly& lhs, const BigInt& scalar) {
  if (scalar == 0) return Poly();
  Poly result = lhs;
  for (auto& c : result.coefficients_) c *= scalar;
  return result;
}

Poly Poly::operator-() const {
  Poly result = *this;
  for (auto& c : result.coefficients_) c = -c;
  return result;
}

Poly Poly::pow(unsigned long exponent) const {
  Poly result = Poly::one();
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1UL;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string Poly::to_json() const {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& c : coefficients_) array.push_back(rational_repr(c));
  return array.dump();
}

Poly Poly::from_json(std::string_view text) {
  const nlohmann::json array = nlohmann::json::parse(text);
  if (!array.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Rational> coefficients;
  coefficients.reserve(array.size());
  for (const auto& entry : array) {
    if (!entry.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    coefficients.push_back(parse_rational(entry.get<std::string>()));
  }
  return Poly(std::move(coefficients));
}

}  // namespace reachcorr
