#pragma once

#include "qbern/context.hpp"
#include "qbern/rational.hpp"

namespace qbern {

/// [n]_q = (1 - q^n)/(1 - q); [0]_q = 0.
Rational q_int(const QContext& ctx, long n);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
Rational q_factorial(const QContext& ctx, long n);

/// Gaussian binomial; zero for k > n and for k < 0.
Rational q_binomial(const QContext& ctx, long n, long k);

/// (a; base)_n = prod_{m<n} (1 - a base^m).
Rational q_pochhammer(const Rational& a, const Rational& base, long n);

/// (a; q)_n with the context base.
inline Rational q_pochhammer(const QContext& ctx, const Rational& a, long n) {
  return q_pochhammer(a, ctx.q(), n);
}

/// prod_{i<n} (1 - c base^{2i}) / (1 - c base^i), with the i = 0 factor fixed at 1.
///
/// This is (c; base^2)_n / (c; base)_n for c != 1 and its limit at c = 1.
Rational pochhammer_ratio(const Rational& c, const Rational& base, long n);

/// q^{m/4}.
inline Rational q_power(const QContext& ctx, long exponent_in_quarters) {
  return ctx.pow_quarters(exponent_in_quarters);
}

}  // namespace qbern
