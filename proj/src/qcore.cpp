#include "qbern/qcore.hpp"

#include <stdexcept>

#include "qbern/errors.hpp"

namespace qbern {

Rational q_int(const QContext& ctx, long n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be non-negative");
  return (Rational(1) - ctx.pow_int(n)) / (Rational(1) - ctx.q());
}

Rational q_factorial(const QContext& ctx, long n) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be non-negative");
  Rational out(1);
  for (long m = 1; m <= n; ++m) out *= q_int(ctx, m);
  return out;
}

Rational q_binomial(const QContext& ctx, long n, long k) {
  if (n < 0) throw std::invalid_argument("q_binomial: n must be non-negative");
  if (k < 0 || k > n) return Rational(0);
  // Product form avoids three factorials: prod_{i<k} (1 - q^{n-i}) / (1 - q^{i+1}).
  Rational out(1);
  for (long i = 0; i < k; ++i)
    out *= (Rational(1) - ctx.pow_int(n - i)) / (Rational(1) - ctx.pow_int(i + 1));
  return out;
}

Rational q_pochhammer(const Rational& a, const Rational& base, long n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: n must be non-negative");
  Rational out(1), power(1);
  for (long m = 0; m < n; ++m) {
    out *= Rational(1) - a * power;
    power *= base;
  }
  return out;
}

Rational pochhammer_ratio(const Rational& c, const Rational& base, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer_ratio: n must be non-negative");
  Rational out(1), power(base);
  for (long i = 1; i < n; ++i) {
    const Rational den = Rational(1) - c * power;
    if (den == 0) throw DomainError("pochhammer_ratio: vanishing factor (1 - c base^i)");
    out *= (Rational(1) - c * power * power) / den;
    power *= base;
  }
  return out;
}

}  // namespace qbern
