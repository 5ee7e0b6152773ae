#pragma once

#include <mpfr.h>

#include <compare>
#include <optional>
#include <string>

#include "qbern/rational.hpp"

namespace qbern {

/// Binary floating-point value with an explicit precision in bits (MPFR,
/// round-to-nearest). Binary operations produce a result at the larger of
/// the two operand precisions.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit BigFloat(mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(long value, mpfr_prec_t precision);
  BigFloat(const Rational& value, mpfr_prec_t precision);
  /// Decimal or "p/r" text.
  static BigFloat parse(const std::string& text, mpfr_prec_t precision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  /// Same value rounded to another precision.
  BigFloat with_precision(mpfr_prec_t precision) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  /// Scientific notation with `digits` significant decimal digits,
  /// independent of the C locale: "-1.2345e-7".
  std::string to_decimal(int digits) const;
  /// Decimal string tagged with the binary precision: "1.25e0@128b".
  std::string to_tagged_string() const;
  /// Significant decimal digits that round-trip the stored precision.
  int decimal_digits() const;

  /// floor(log2 |x|) + 1, or nullopt for zero.
  std::optional<long> exponent2() const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& x, long e);
BigFloat pow(const BigFloat& x, const BigFloat& e);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// 2^e at the given precision (exact).
BigFloat ldexp2(long e, mpfr_prec_t precision);

/// Interval [mid - rad, mid + rad] known to contain the true value.
struct Enclosure {
  BigFloat mid;
  BigFloat rad;

  /// +1 / -1 when the whole interval lies on one side of zero.
  std::optional<int> certain_sign() const;
  BigFloat upper_abs() const { return abs(mid) + rad; }
};

}  // namespace qbern
