#pragma once

#include "qbern/bigfloat.hpp"
#include "qbern/rational.hpp"

namespace qbern {

/// Parameter pack every operation is evaluated against: the base q, the
/// Bessel order α and the target precision of approximate results.
///
/// q is held through an exact root r = q^{1/d}, d ∈ {1,2,4}, the largest d for
/// which the root is rational. Exact powers q^{m/4} are available whenever
/// m·d is divisible by 4; anything else raises ExactModeError.
class QContext {
 public:
  static constexpr unsigned kDefaultPrecisionBits = 128;
  static constexpr unsigned kGuardBits = 32;

  /// Requires 0 < q < 1 and α > -1.
  static QContext from_q(const Rational& q, const Rational& alpha,
                         unsigned precision_bits = kDefaultPrecisionBits);
  /// q = b^4 with 0 < b < 1.
  static QContext from_quarter_root(const Rational& b, const Rational& alpha,
                                    unsigned precision_bits = kDefaultPrecisionBits);

  /// Same α, base 1/q (root 1/r). Such a context has q > 1 and is meant for
  /// exact algebraic identities only.
  QContext reciprocal_base() const;
  QContext with_alpha(const Rational& alpha) const;
  QContext with_precision(unsigned precision_bits) const;

  const Rational& q() const { return q_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& root() const { return root_; }
  unsigned root_index() const { return root_index_; }
  unsigned precision_bits() const { return precision_bits_; }
  mpfr_prec_t working_precision() const { return precision_bits_ + kGuardBits; }
  bool is_reciprocal_base() const { return q_ > 1; }

  /// 4α ∈ ℤ: the exact routines are defined.
  bool exact_alpha() const;
  /// Throws ExactModeError naming `operation` unless exact_alpha().
  void require_exact_alpha(const char* operation) const;

  Rational pow_int(long n) const;
  bool has_pow_quarters(long m) const;
  /// q^{m/4}.
  Rational pow_quarters(long m) const;
  bool has_pow(const Rational& exponent) const;
  /// q^e for rational e with 4e ∈ ℤ and a representable root.
  Rational pow(const Rational& exponent) const;
  /// q^e at working precision; exact-rounded when q^e is rational.
  BigFloat pow_float(const Rational& exponent) const;
  BigFloat q_float() const { return BigFloat(q_, working_precision()); }
  BigFloat alpha_float() const { return BigFloat(alpha_, working_precision()); }

 private:
  QContext(Rational q, Rational root, unsigned root_index, Rational alpha, unsigned bits);

  Rational q_;
  Rational root_;
  unsigned root_index_;
  Rational alpha_;
  unsigned precision_bits_;
};

}  // namespace qbern
