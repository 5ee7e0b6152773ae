#include "qbern/expand.hpp"

#include <stdexcept>

#include "qbern/errors.hpp"
#include "qbern/qcore.hpp"
#include "qbern/qfun.hpp"

namespace qbern {

Rational CoefficientStream::at(long k) const {
  if (k < 0 || k > last_index()) return Rational(0);
  return coefficients[static_cast<std::size_t>(k)];
}

CoefficientStream CoefficientStream::from_poly(const PolyZ& p) {
  return CoefficientStream{p.coefficients(), std::nullopt};
}

CoefficientStream CoefficientStream::geometric(std::vector<Rational> coefficients, const Rational& ratio) {
  if (coefficients.empty()) throw std::invalid_argument("geometric stream needs at least one coefficient");
  if (ratio < 0) throw std::invalid_argument("geometric ratio must be non-negative");
  return CoefficientStream{std::move(coefficients), ratio};
}

Rational psi(const QContext& ctx, long n) {
  if (n < 0) throw std::invalid_argument("psi: n must be non-negative");
  return Rational(ctx.pow_int(n * (n - 1) / 2) / q_factorial(ctx, n));
}

namespace {

// f_k / Ψ_k
Rational borel_coefficient(const QContext& ctx, const CoefficientStream& s, long k) {
  return Rational(s.at(k) / psi(ctx, k));
}

BigFloat abs_root(const Rational& x, long n, mpfr_prec_t wp) {
  if (x == 0) return BigFloat(wp);
  BigFloat v(Rational(::abs(x)), wp);
  BigFloat out(wp);
  mpfr_rootn_ui(out.get(), v.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return out;
}

}  // namespace

BigFloat tau_estimate(const QContext& ctx, const CoefficientStream& stream, long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("tau_estimate: empty window");
  if (!stream.finite() && hi > stream.last_index())
    throw std::invalid_argument("tau_estimate: window beyond the stored coefficients");
  const mpfr_prec_t wp = ctx.working_precision();
  BigFloat best(wp);
  for (long n = std::max(lo, 1L); n <= hi; ++n) best = max(best, abs_root(borel_coefficient(ctx, stream, n), n, wp));
  return best;
}

GrowthVerdict growth_classify(const QContext& ctx, const CoefficientStream& stream, const Rational& order,
                              const Rational& gamma) {
  if (order <= 0) throw std::invalid_argument("growth_classify: order must be positive");
  const mpfr_prec_t wp = ctx.working_precision();
  GrowthVerdict v{BigFloat(wp), -1, std::nullopt, {}};
  for (long n = 0; n <= stream.last_index(); ++n) {
    const Rational f = stream.at(n);
    if (f == 0) continue;
    const Rational e = (n - gamma) * (n - gamma) / (2 * order);
    BigFloat k = BigFloat(Rational(::abs(f)), wp) / ctx.pow_float(e);
    if (v.argmax < 0 || k > v.K) {
      v.K = k;
      v.argmax = n;
    }
  }
  if (order < 1) {
    v.advisory = "order < 1: tau estimate should tend to 0";
  } else if (order == 1) {
    v.tau_bound = ctx.pow_float(Rational(Rational(1, 2) - gamma)) / BigFloat(Rational(1 - ctx.q()), wp);
    v.advisory = "order 1, type " + to_string(gamma) + ": tau < " + v.tau_bound->to_decimal(20);
  } else {
    v.advisory = "order > 1: no conclusion";
  }
  return v;
}

Rational l_weight(const QContext& ctx, long j) {
  const Rational c = ctx.pow(2 * ctx.alpha() + 1);
  return Rational(pochhammer_ratio(c, ctx.q(), j) / (pow(Rational(2), j) * q_pochhammer(ctx, ctx.q(), j)));
}

BigFloat l_weight_bound(const QContext& ctx) {
  const mpfr_prec_t wp = ctx.working_precision();
  const BigFloat q = ctx.q_float();
  const BigFloat one(1, wp);
  const BigFloat eps = ldexp2(-static_cast<long>(wp), wp);
  // (x;q)_∞ from below: ∏_{i>=N}(1 - x q^i) >= 1 - Σ_{i>=N} x q^i
  auto lower = [&](BigFloat x) -> BigFloat {
    BigFloat prod(1, wp);
    while (x > eps) {
      prod *= one - x;
      x *= q;
    }
    return prod * (one - x / (one - q));
  };
  const BigFloat d = lower(ctx.pow_float(2 * ctx.alpha() + 2)) * lower(q);
  return (one + ldexp2(8 - static_cast<long>(wp), wp)) / d;
}

namespace {

void check_truncation(const CoefficientStream& stream, const Rational& q) {
  if (stream.geometric_ratio && *stream.geometric_ratio * (1 - q) >= 2)
    throw DomainError("cannot truncate: geometric ratio " + to_string(*stream.geometric_ratio) +
                      " gives a divergent tail (need ratio < 2/(1-q))");
}

struct O8Factors {
  std::vector<Rational> a;  // f_k q^{-k(k-1)/2} (q;q)_k
  std::vector<Rational> inv_scale;  // (1-q)^{-n}
};

O8Factors o8_factors(const QContext& ctx, const CoefficientStream& stream, long n_max) {
  O8Factors f;
  const long m = stream.last_index();
  f.a.resize(static_cast<std::size_t>(std::max(m + 1, 0L)));
  for (long k = 0; k <= m; ++k)
    f.a[k] = stream.at(k) * ctx.pow_int(-k * (k - 1) / 2) * q_pochhammer(ctx, ctx.q(), k);
  const Rational s = 1 / Rational(1 - ctx.q());
  f.inv_scale.resize(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) f.inv_scale[n] = pow(s, n);
  return f;
}

Rational o8_sum(const O8Factors& f, const std::vector<Rational>& w, long n) {
  Rational sum(0);
  for (long k = n; k < static_cast<long>(f.a.size()); ++k) sum += f.a[k] * w[k - n];
  return Rational(sum * f.inv_scale[n]);
}

std::vector<Rational> o8_all(const QContext& ctx, const CoefficientStream& stream, long n_max,
                             const std::vector<Rational>& w, Exec exec) {
  const O8Factors f = o8_factors(ctx, stream, n_max);
  std::vector<Rational> out(static_cast<std::size_t>(n_max + 1));
  for_each_index(n_max + 1, exec, [&](long n) { out[n] = o8_sum(f, w, n); });
  return out;
}

}  // namespace

LCoefficients l_coefficients(const QContext& ctx, const CoefficientStream& stream, long n_max, Exec exec) {
  if (n_max < 0) throw std::invalid_argument("l_coefficients: n_max must be non-negative");
  check_truncation(stream, ctx.q());
  ctx.require_exact_alpha("l_coefficients");
  const long m = stream.last_index();
  std::vector<Rational> w(static_cast<std::size_t>(std::max(m + 1, 0L)));
  for (long j = 0; j <= m; ++j) w[j] = l_weight(ctx, j);

  LCoefficients out;
  out.values = o8_all(ctx, stream, n_max, w, exec);
  const mpfr_prec_t wp = ctx.working_precision();
  out.tail_bounds.assign(static_cast<std::size_t>(n_max + 1), BigFloat(wp));
  out.exact = stream.finite();
  if (!stream.finite()) {
    const BigFloat r(*stream.geometric_ratio, wp);
    const BigFloat a(Rational(::abs(borel_coefficient(ctx, stream, m))), wp);
    const BigFloat p = l_weight_bound(ctx);
    const BigFloat h(Rational((1 - ctx.q()) / 2), wp);
    const BigFloat denom = BigFloat(1, wp) - r * h;
    for (long n = 0; n <= n_max; ++n) {
      const long k0 = std::max(n, m + 1);
      out.tail_bounds[n] = a * p * pow(r, k0 - m) * pow(h, k0 - n) / denom;
    }
  }
  return out;
}

std::vector<Rational> l_coefficients_mu(const QContext& ctx, const CoefficientStream& stream, long n_max) {
  const long m = stream.last_index();
  const std::vector<Rational> mus = mu_table(ctx, Kind::second, std::max(m, 0L));
  std::vector<Rational> out(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) {
    Rational sum(0);
    for (long k = n; k <= m; ++k)
      sum += borel_coefficient(ctx, stream, k) * mus[k - n] / q_factorial(ctx, k - n);
    out[n] = sum;
  }
  return out;
}

PolyZ reconstruct_exact(const QContext& ctx, const LCoefficients& l) {
  const long n_max = static_cast<long>(l.values.size()) - 1;
  const std::vector<PolyZ> basis = bernoulli_poly_det_table(ctx, Kind::second, n_max);
  PolyZ sum;
  for (long n = 0; n <= n_max; ++n) sum += basis[n] * Rational(l.values[n] / q_factorial(ctx, n));
  return sum;
}

BigFloat reconstruct(const QContext& ctx, const CoefficientStream& stream, const BigFloat& z, long n_max) {
  const LCoefficients l = l_coefficients(ctx, stream, n_max);
  const std::vector<PolyZ> basis = bernoulli_poly_det_table(ctx, Kind::second, n_max);
  const mpfr_prec_t wp = ctx.working_precision();
  const BigFloat zw = z.with_precision(wp);
  BigFloat sum(wp);
  for (long n = 0; n <= n_max; ++n)
    sum += BigFloat(Rational(l.values[n] / q_factorial(ctx, n)), wp) * basis[n].evaluate(zw);
  return sum;
}

bool exact_identity(const QContext& ctx, const CoefficientStream& stream, long n_max) {
  if (!stream.finite() || n_max < stream.last_index()) return false;
  return reconstruct_exact(ctx, l_coefficients(ctx, stream, n_max)) == PolyZ(stream.coefficients);
}

const char* to_string(CorollaryVariant v) { return v == CorollaryVariant::bernoulli ? "bernoulli" : "euler"; }

Rational corollary_alpha(CorollaryVariant v) {
  return v == CorollaryVariant::bernoulli ? Rational(1, 2) : Rational(-1, 2);
}

Rational corollary_weight(const QContext& ctx, CorollaryVariant v, long j) {
  const Rational& q = ctx.q();
  const Rational half_j = 1 / pow(Rational(2), j);
  if (v == CorollaryVariant::bernoulli)
    return Rational(q_pochhammer(-q, q, j) * half_j / q_pochhammer(q * q, q, j));
  if (j == 0) return Rational(1);
  return Rational(q_pochhammer(-q, q, j - 1) * half_j / q_pochhammer(q, q, j));
}

Rational corollary_weight_literal(const QContext& ctx, CorollaryVariant v, long j) {
  if (v == CorollaryVariant::bernoulli) return corollary_weight(ctx, v, j);
  const Rational& q = ctx.q();
  return Rational(q_pochhammer(Rational(-1), q, j) / (pow(Rational(2), j) * q_pochhammer(q, q, j)));
}

std::vector<Rational> corollary_wrappers(const QContext& ctx, const CoefficientStream& stream,
                                         CorollaryVariant v, long n_max) {
  if (n_max < 0) throw std::invalid_argument("corollary_wrappers: n_max must be non-negative");
  check_truncation(stream, ctx.q());
  const QContext fixed = ctx.with_alpha(corollary_alpha(v));
  std::vector<Rational> w(static_cast<std::size_t>(std::max(stream.last_index() + 1, 0L)));
  for (long j = 0; j < static_cast<long>(w.size()); ++j) w[j] = corollary_weight(fixed, v, j);
  return o8_all(fixed, stream, n_max, w, Exec::parallel);
}

CoefficientStream qpochhammer_stream(const QContext& ctx, long n) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (long m = 0; m <= n; ++m)
    c[m] = (m % 2 ? -1 : 1) * q_binomial(ctx, n, m) * ctx.pow_int(m * (m - 1) / 2);
  return CoefficientStream{std::move(c), std::nullopt};
}

PochhammerComparison pochhammer_comparison(const QContext& ctx, long n) {
  PochhammerComparison r;
  r.n = n;
  r.l = l_coefficients(ctx, qpochhammer_stream(ctx, n), n).values;
  const Rational& q = ctx.q();
  const Rational a = ctx.pow(ctx.alpha() + Rational(1, 2));
  const Rational phi = phi32(ctx, ctx.pow_int(-n), a, -a, ctx.pow(2 * ctx.alpha() + 1), q,
                             Rational(q * (1 - q) / 2));
  r.closed_form = (n % 2 ? -1 : 1) * q_factorial(ctx, n) * phi;
  for (long m = 0; m <= n; ++m)
    if (r.l[m] == r.closed_form) r.matching.push_back(m);
  return r;
}

}  // namespace qbern
