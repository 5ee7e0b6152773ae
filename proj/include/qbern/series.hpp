#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qbern/context.hpp"
#include "qbern/kind.hpp"
#include "qbern/poly.hpp"
#include "qbern/rational.hpp"

namespace qbern {

/// Formal power series in t known modulo t^{order+1}.
template <class R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  /// order = coefficients.size() - 1; `coefficients` must be non-empty.
  explicit TruncatedSeries(std::vector<R> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  R& operator[](std::size_t i) { return coeffs_.at(i); }
  const R& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<R> coeffs_;
};

using ScalarSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<PolyZ>;

namespace detail {

template <class A, class B>
struct product_type {
  using type = PolyZ;
};
template <>
struct product_type<Rational, Rational> {
  using type = Rational;
};

inline Rational times(const Rational& a, const Rational& b) { return a * b; }
inline PolyZ times(const PolyZ& a, const Rational& b) { return a * b; }
inline PolyZ times(const Rational& a, const PolyZ& b) { return b * a; }
inline PolyZ times(const PolyZ& a, const PolyZ& b) { return a * b; }

template <class R>
bool is_zero_coefficient(const R& x) {
  if constexpr (std::is_same_v<R, PolyZ>) return x.is_zero();
  else return x == 0;
}

}  // namespace detail

/// Cauchy product truncated at the common order.
template <class A, class B>
TruncatedSeries<typename detail::product_type<A, B>::type> series_mul(const TruncatedSeries<A>& a,
                                                                       const TruncatedSeries<B>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series_mul: orders differ");
  const std::size_t n = a.order();
  TruncatedSeries<typename detail::product_type<A, B>::type> out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (detail::is_zero_coefficient(a[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (detail::is_zero_coefficient(b[j])) continue;
      out[i + j] += detail::times(a[i], b[j]);
    }
  }
  return out;
}

/// r with a·r = 1 modulo t^{N+1}. Throws std::domain_error("non-invertible
/// series") when the constant term is zero.
ScalarSeries series_reciprocal(const ScalarSeries& a);

/// Σ_m w(m) (c t)^m / [m]_q! for the chosen q-exponential, where w is 1,
/// q^{m(m-1)/2} or q^{m(m-1)/4}.
ScalarSeries qexp_series(const QContext& ctx, QExpFamily family, const Rational& c, std::size_t order);

/// Coefficient weight w(m) of the q-exponential family (see qexp_series).
Rational qexp_weight(const QContext& ctx, QExpFamily family, long m);

/// The modified q-Bessel denominator of the generating function as an even
/// series in t.
ScalarSeries gf_denominator(const QContext& ctx, Kind kind, std::size_t order);

/// The product of q-exponentials e(zt) e(-t/2) with PolyZ coefficients.
PolySeries gf_numerator(const QContext& ctx, Kind kind, std::size_t order);

/// B^{(k)}_{n,α}(z;q) from the generating function: [n]_q! [t^n] num/den.
PolyZ oracle_bernoulli(const QContext& ctx, Kind kind, long n);

/// B_0 .. B_N from a single series division.
std::vector<PolyZ> oracle_bernoulli_table(const QContext& ctx, Kind kind, long n_max);

}  // namespace qbern
