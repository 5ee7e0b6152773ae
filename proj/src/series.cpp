#include "qbern/series.hpp"

#include <stdexcept>

#include "qbern/qcore.hpp"

namespace qbern {

ScalarSeries series_reciprocal(const ScalarSeries& a) {
  if (a[0] == 0) throw std::domain_error("non-invertible series");
  const std::size_t n = a.order();
  ScalarSeries r(n);
  const Rational inv0 = 1 / a[0];
  r[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    for (std::size_t i = 1; i <= m; ++i)
      if (a[i] != 0) acc += a[i] * r[m - i];
    r[m] = -acc * inv0;
  }
  return r;
}

Rational qexp_weight(const QContext& ctx, QExpFamily family, long m) {
  switch (family) {
    case QExpFamily::e_q: return 1;
    case QExpFamily::E_q: return ctx.pow_quarters(2 * m * (m - 1));
    case QExpFamily::exp_q: return ctx.pow_quarters(m * (m - 1));
  }
  throw std::invalid_argument("bad q-exponential family");
}

ScalarSeries qexp_series(const QContext& ctx, QExpFamily family, const Rational& c, std::size_t order) {
  ScalarSeries s(order);
  Rational fact(1), cp(1);
  for (std::size_t m = 0; m <= order; ++m) {
    if (m > 0) {
      fact *= q_int(ctx, static_cast<long>(m));
      cp *= c;
    }
    s[m] = qexp_weight(ctx, family, static_cast<long>(m)) * cp / fact;
  }
  return s;
}

namespace {

Rational den_weight(const QContext& ctx, Kind kind, long n) {
  switch (kind) {
    case Kind::first: return 1;
    case Kind::second: return ctx.pow(Rational(2 * n) * ctx.alpha() + 2 * n * n);
    case Kind::third: return ctx.pow_quarters(4 * n * n + 2 * n);
  }
  throw std::invalid_argument("bad kind");
}

}  // namespace

ScalarSeries gf_denominator(const QContext& ctx, Kind kind, std::size_t order) {
  ctx.require_exact_alpha("gf_denominator");
  const Rational q = ctx.q();
  const Rational q2 = q * q;
  const Rational a2 = ctx.pow(2 * ctx.alpha() + 2);
  const Rational h = (1 - q) / 2;
  const Rational h2 = h * h;
  ScalarSeries s(order);
  Rational hp(1), p1(1), p2(1);
  for (std::size_t n = 0; 2 * n <= order; ++n) {
    if (n > 0) {
      hp *= h2;
      p1 *= 1 - pow(q2, static_cast<long>(n));
      p2 *= 1 - a2 * pow(q2, static_cast<long>(n - 1));
    }
    s[2 * n] = hp * den_weight(ctx, kind, static_cast<long>(n)) / (p1 * p2);
  }
  return s;
}

PolySeries gf_numerator(const QContext& ctx, Kind kind, std::size_t order) {
  ctx.require_exact_alpha("gf_numerator");
  const QExpFamily fam = exp_family(kind);
  PolySeries z_part(order);
  for (std::size_t m = 0; m <= order; ++m) {
    const Rational w = qexp_weight(ctx, fam, static_cast<long>(m)) / q_factorial(ctx, static_cast<long>(m));
    z_part[m] = PolyZ::monomial(w, m);
  }
  return series_mul(z_part, qexp_series(ctx, fam, make_rational(-1, 2), order));
}

std::vector<PolyZ> oracle_bernoulli_table(const QContext& ctx, Kind kind, long n_max) {
  if (n_max < 0) throw std::invalid_argument("oracle_bernoulli: negative index");
  const auto order = static_cast<std::size_t>(n_max);
  const PolySeries quotient =
      series_mul(gf_numerator(ctx, kind, order), series_reciprocal(gf_denominator(ctx, kind, order)));
  std::vector<PolyZ> out;
  out.reserve(order + 1);
  Rational fact(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) fact *= q_int(ctx, static_cast<long>(n));
    out.push_back(quotient[n] * fact);
  }
  return out;
}

PolyZ oracle_bernoulli(const QContext& ctx, Kind kind, long n) {
  return oracle_bernoulli_table(ctx, kind, n).back();
}

}  // namespace qbern
