#include "qbern/poly.hpp"

#include <algorithm>
#include <ostream>

namespace qbern {

PolyZ::PolyZ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

PolyZ PolyZ::constant(const Rational& c) { return PolyZ(std::vector<Rational>{c}); }

PolyZ PolyZ::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return PolyZ(std::move(v));
}

void PolyZ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyZ::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational PolyZ::operator()(const Rational& z) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

BigFloat PolyZ::evaluate(const BigFloat& z) const {
  BigFloat acc(0L, z.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + BigFloat(*it, z.precision());
  return acc;
}

PolyZ& PolyZ::operator+=(const PolyZ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyZ(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const PolyZ& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) os << (i ? ", \"" : "\"") << to_string(p.coefficients()[i]) << '"';
  return os << ']';
}

}  // namespace qbern
