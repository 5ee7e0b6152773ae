#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qbern/bigfloat.hpp"
#include "qbern/rational.hpp"

namespace qbern {

/// Dense polynomial in z over the rationals. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients and degree -1.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Rational> coefficients);
  static PolyZ constant(const Rational& c);
  static PolyZ monomial(const Rational& c, std::size_t power);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  Rational coefficient(std::size_t power) const;

  Rational operator()(const Rational& z) const;
  BigFloat evaluate(const BigFloat& z) const;

  PolyZ& operator+=(const PolyZ& rhs);
  PolyZ& operator-=(const PolyZ& rhs);
  PolyZ& operator*=(const Rational& c);
  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(PolyZ a, const Rational& c) { return a *= c; }
  friend PolyZ operator*(const Rational& c, PolyZ a) { return a *= c; }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// ["c0", "c1", ...]
std::ostream& operator<<(std::ostream& os, const PolyZ& p);

}  // namespace qbern
