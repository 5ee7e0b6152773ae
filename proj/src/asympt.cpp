#include "qbern/asympt.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qbern/errors.hpp"
#include "qbern/qcore.hpp"

namespace qbern {

const char* to_string(TrigZero which) {
  switch (which) {
    case TrigZero::zeta: return "zeta";
    case TrigZero::eta: return "eta";
    case TrigZero::lambda: return "lambda";
    case TrigZero::mu: return "mu";
  }
  return "?";
}

namespace {

using Target = std::function<Enclosure(const BigFloat&)>;

constexpr int kMaxSteps = 400;

// Steps right from `start` (x ×1.5 growth) until the certified sign differs
// from the sign at `start`, then bisects.
ZeroResult first_sign_change(const Target& f, BigFloat start, BigFloat step, const BigFloat* limit,
                             unsigned bits, mpfr_prec_t wp) {
  auto s0 = f(start).certain_sign();
  if (!s0) throw NumericError("sign at the search start is not certified");
  BigFloat lo = start;
  BigFloat hi(wp);
  bool found = false;
  int halvings = 0;
  const BigFloat growth = BigFloat(make_rational(3, 2), wp);
  for (int i = 0; i < kMaxSteps && !found; ++i) {
    BigFloat x = lo + step;
    if (limit && !(x < *limit)) {
      // series slow down near the edge of the disk; give up after a few halvings
      if (++halvings > 12) break;
      x = (lo + *limit) / BigFloat(2, wp);
    }
    std::optional<int> s;
    try {
      s = f(x).certain_sign();
    } catch (const NumericError&) {
      if (!limit) throw;
      break;
    }
    if (s && *s != *s0) {
      hi = x;
      found = true;
    } else if (s) {
      lo = x;
      step *= growth;
    } else {
      // x landed within rounding distance of a zero; nudge forward
      step = step * growth;
    }
  }
  if (!found) throw NumericError("no zero found in search range");
  const BigFloat tol = ldexp2(-static_cast<long>(bits) - 4, wp) * max(BigFloat(1, wp), abs(hi));
  const BigFloat two(2, wp);
  while (hi - lo > tol) {
    const BigFloat mid = (lo + hi) / two;
    const auto s = f(mid).certain_sign();
    if (!s) break;
    if (*s == *s0) lo = mid;
    else hi = mid;
  }
  BigFloat loc = (lo + hi) / two;
  BigFloat res = abs(f(loc).mid);
  return {std::move(loc), std::move(lo), std::move(hi), std::move(res)};
}

unsigned resolve_bits(const QContext& ctx, unsigned bits) { return bits ? bits : ctx.precision_bits(); }

}  // namespace

ZeroResult smallest_zero(const QContext& ctx, Kind kind, unsigned precision_bits) {
  const QContext c = ctx.with_precision(resolve_bits(ctx, precision_bits));
  const mpfr_prec_t wp = c.working_precision();
  const BigFloat step = (BigFloat(1, wp) - c.q_float()) / BigFloat(2, wp);
  const BigFloat two(2, wp);
  const Target f = [&](const BigFloat& x) { return modified_bessel_enclosure(c, kind, 2, x); };
  return first_sign_change(f, BigFloat(wp), step, kind == Kind::first ? &two : nullptr, c.precision_bits(), wp);
}

Enclosure trig_zero_target(const QContext& ctx, TrigZero which, const BigFloat& z) {
  switch (which) {
    case TrigZero::zeta: return qtrig_enclosure(ctx, QTrigKind::Sin_q, z);
    case TrigZero::eta: return qtrig_enclosure(ctx, QTrigKind::Cos_q, z);
    case TrigZero::lambda: return qtrig_enclosure(ctx, QTrigKind::S_q, z);
    case TrigZero::mu: return qtrig_enclosure(ctx, QTrigKind::C_q, ctx.pow_float(make_rational(1, 2)) * z);
  }
  throw std::invalid_argument("bad zero name");
}

namespace {

bool odd_target(TrigZero which) { return which == TrigZero::zeta || which == TrigZero::lambda; }

// j -> named zero: ζ, η = j/(2(1-q)); λ, μ = q^{1/4} j/(1-q)
BigFloat reduction_scale(const QContext& c, TrigZero which) {
  const mpfr_prec_t wp = c.working_precision();
  const BigFloat omq = BigFloat(1, wp) - c.q_float();
  if (which == TrigZero::zeta || which == TrigZero::eta) return BigFloat(1, wp) / (BigFloat(2, wp) * omq);
  return c.pow_float(make_rational(1, 4)) / omq;
}

}  // namespace

ZeroResult named_trig_zero(const QContext& ctx, TrigZero which, unsigned precision_bits) {
  const unsigned bits = resolve_bits(ctx, precision_bits);
  const Rational alpha = odd_target(which) ? make_rational(1, 2) : make_rational(-1, 2);
  const Kind kind = (which == TrigZero::zeta || which == TrigZero::eta) ? Kind::second : Kind::third;
  const QContext c = ctx.with_alpha(alpha).with_precision(bits);
  const mpfr_prec_t wp = c.working_precision();
  const ZeroResult j = smallest_zero(c, kind, bits);
  const BigFloat scale = reduction_scale(c, which);

  ZeroResult out{j.location * scale, j.lower * scale, j.upper * scale, BigFloat(wp)};
  BigFloat widen = (out.upper - out.lower) / BigFloat(2, wp);
  if (widen.is_zero()) widen = ldexp2(-static_cast<long>(bits) - 4, wp);
  for (int attempt = 0;; ++attempt) {
    const auto a = trig_zero_target(c, which, out.lower).certain_sign();
    const auto b = trig_zero_target(c, which, out.upper).certain_sign();
    if (a && b && *a != *b) break;
    if (attempt == 40) throw NumericError(std::string("cannot certify the bracket of ") + to_string(which));
    out.lower -= widen;
    out.upper += widen;
    widen *= BigFloat(2, wp);
  }
  out.residual = abs(trig_zero_target(c, which, out.location).mid);
  if (out.residual > ldexp2(-static_cast<long>(bits) + 16, wp))
    throw NumericError(std::string("reduced zero does not satisfy its defining equation: ") + to_string(which));
  return out;
}

ZeroResult direct_trig_zero(const QContext& ctx, TrigZero which, unsigned precision_bits) {
  const QContext c = ctx.with_precision(resolve_bits(ctx, precision_bits));
  const mpfr_prec_t wp = c.working_precision();
  const BigFloat step = (BigFloat(1, wp) - c.q_float()) / BigFloat(2, wp);
  const Target f = [&](const BigFloat& z) { return trig_zero_target(c, which, z); };
  // Sin_q and S_q vanish at 0; start just to the right
  BigFloat start = odd_target(which) ? step / BigFloat(1024, wp) : BigFloat(wp);
  return first_sign_change(f, std::move(start), step, nullptr, c.precision_bits(), wp);
}

BigFloat bessel_derivative_at(const QContext& ctx, Kind kind, const BigFloat& x) {
  return modified_bessel_derivative_enclosure(ctx, kind, 2, x).mid;
}

DarbouxData darboux_data(const QContext& ctx, Kind kind) {
  if (kind == Kind::first) throw std::invalid_argument("Darboux asymptotics are for the second and third kind");
  const mpfr_prec_t wp = ctx.working_precision();
  const BigFloat omq = BigFloat(1, wp) - ctx.q_float();
  ZeroResult zero = smallest_zero(ctx, kind);
  DarbouxData d{kind, zero, BigFloat(wp), BigFloat(wp), BigFloat(wp), BigFloat(wp), BigFloat(wp),
                QTrigKind::Cos_q, QTrigKind::Sin_q};
  if (kind == Kind::second) {
    d.scale = zero.location / (BigFloat(2, wp) * omq);
    d.prefactor = BigFloat(2, wp) / omq;
  } else {
    const BigFloat q14 = ctx.pow_float(make_rational(1, 4));
    d.scale = q14 * zero.location / omq;
    d.prefactor = BigFloat(4, wp) * q14 / omq;
    d.cos_kind = QTrigKind::C_q;
    d.sin_kind = QTrigKind::S_q;
  }
  d.derivative = bessel_derivative_at(ctx, kind, zero.location);
  d.cos_scale = eval_qtrig(ctx, d.cos_kind, d.scale);
  d.sin_scale = eval_qtrig(ctx, d.sin_kind, d.scale);
  return d;
}

namespace {

BigFloat signed_factorial(const QContext& ctx, long m, bool negative) {
  BigFloat f(q_factorial(ctx, m), ctx.working_precision());
  return negative ? -f : f;
}

}  // namespace

AsymptoticTerm leading_term(const QContext& ctx, const DarbouxData& data, long m, const BigFloat& z) {
  if (m < 1) throw std::invalid_argument("leading_term needs degree >= 1");
  const mpfr_prec_t wp = ctx.working_precision();
  const long n = m / 2;
  const bool even = m % 2 == 0;
  AsymptoticTerm t{m, even, BigFloat(wp), data.prefactor, signed_factorial(ctx, m, n % 2 == 0),
                   BigFloat(wp), BigFloat(wp), data.derivative};
  const BigFloat arg = BigFloat(2, wp) * data.scale * z.with_precision(wp);
  const BigFloat c2 = eval_qtrig(ctx, data.cos_kind, arg);
  const BigFloat s2 = eval_qtrig(ctx, data.sin_kind, arg);
  if (even) t.trig = c2 * data.cos_scale + s2 * data.sin_scale;
  else t.trig = s2 * data.cos_scale - c2 * data.sin_scale;
  t.power = pow(BigFloat(2, wp) * data.scale, m + 1);
  t.value = t.prefactor * t.factorial;
  t.value *= t.trig;
  t.value /= t.power * t.derivative;
  return t;
}

AsymptoticTerm leading_term(const QContext& ctx, Kind kind, long m, const BigFloat& z) {
  return leading_term(ctx, darboux_data(ctx, kind), m, z);
}

BigFloat number_corollary(const QContext& ctx, const DarbouxData& data, long m) {
  if (m < 1) throw std::invalid_argument("number_corollary needs index >= 1");
  const mpfr_prec_t wp = ctx.working_precision();
  const long n = m / 2;
  const bool even = m % 2 == 0;
  // even: (-1)^{n+1} [2n]! Cos(ζ); odd: (-1)^n [2n+1]! Sin(ζ)
  const BigFloat fact = signed_factorial(ctx, m, even ? n % 2 == 0 : n % 2 == 1);
  BigFloat value = data.prefactor * fact;
  value *= even ? data.cos_scale : data.sin_scale;
  value /= pow(BigFloat(2, wp) * data.scale, m + 1) * data.derivative;
  return value;
}

BigFloat classical_corollary(const QContext& ctx, ClassicalFamily family, long m, const BigFloat& z) {
  if (m < 1) throw std::invalid_argument("classical_corollary needs degree >= 1");
  const mpfr_prec_t wp = ctx.working_precision();
  const long n = m / 2;
  const bool even = m % 2 == 0;
  const BigFloat omq = BigFloat(1, wp) - ctx.q_float();
  const BigFloat q14 = ctx.pow_float(make_rational(1, 4));
  const BigFloat two(2, wp);
  const BigFloat zz = z.with_precision(wp);
  switch (family) {
    case ClassicalFamily::bernoulli: {
      const BigFloat s = named_trig_zero(ctx, TrigZero::zeta).location;
      const BigFloat num = (even ? eval_qtrig(ctx, QTrigKind::Cos_q, two * s * zz)
                                 : eval_qtrig(ctx, QTrigKind::Sin_q, two * s * zz)) *
                           eval_qtrig(ctx, QTrigKind::Cos_q, s);
      return signed_factorial(ctx, m, n % 2 == 0) * num /
             (omq * pow(two * s, m) * qtrig_derivative_enclosure(ctx, QTrigKind::Sin_q, s).mid);
    }
    case ClassicalFamily::euler: {
      const BigFloat s = named_trig_zero(ctx, TrigZero::eta).location;
      const BigFloat num = (even ? eval_qtrig(ctx, QTrigKind::Sin_q, two * s * zz)
                                 : eval_qtrig(ctx, QTrigKind::Cos_q, two * s * zz)) *
                           eval_qtrig(ctx, QTrigKind::Sin_q, s);
      const bool negative = even ? n % 2 == 0 : n % 2 == 1;
      return two * signed_factorial(ctx, m, negative) * num /
             (omq * pow(two * s, m + 1) * qtrig_derivative_enclosure(ctx, QTrigKind::Cos_q, s).mid);
    }
    case ClassicalFamily::bernoulli_tilde: {
      const BigFloat s = named_trig_zero(ctx, TrigZero::lambda).location;
      const BigFloat num = (even ? eval_qtrig(ctx, QTrigKind::C_q, two * s * zz)
                                 : eval_qtrig(ctx, QTrigKind::S_q, two * s * zz)) *
                           eval_qtrig(ctx, QTrigKind::C_q, s);
      return two * q14 * signed_factorial(ctx, m, n % 2 == 0) * num /
             (omq * pow(two * s, m) * qtrig_derivative_enclosure(ctx, QTrigKind::S_q, s).mid);
    }
    case ClassicalFamily::euler_tilde: {
      const BigFloat s = named_trig_zero(ctx, TrigZero::mu).location;
      const BigFloat num = (even ? eval_qtrig(ctx, QTrigKind::S_q, two * s * zz)
                                 : eval_qtrig(ctx, QTrigKind::C_q, two * s * zz)) *
                           eval_qtrig(ctx, QTrigKind::S_q, s);
      const bool negative = even ? n % 2 == 0 : n % 2 == 1;
      const BigFloat deriv =
          qtrig_derivative_enclosure(ctx, QTrigKind::C_q, ctx.pow_float(make_rational(1, 2)) * s).mid;
      return BigFloat(4, wp) * q14 * signed_factorial(ctx, m, negative) * num / (omq * pow(two * s, m + 1) * deriv);
    }
  }
  throw std::invalid_argument("bad family");
}

std::vector<DiagnosticRow> ratio_diagnostic(const QContext& ctx, Kind kind, const Rational& z,
                                            const std::vector<long>& n_list, Exec exec) {
  if (n_list.empty()) return {};
  for (long n : n_list)
    if (n < 1) throw std::invalid_argument("ratio_diagnostic needs degrees >= 1");
  const long n_max = *std::max_element(n_list.begin(), n_list.end());
  const auto polys = bernoulli_poly_det_table(ctx, kind, n_max, exec);
  const DarbouxData data = darboux_data(ctx, kind);
  const mpfr_prec_t wp = ctx.working_precision();
  const BigFloat zf(z, wp);
  const BigFloat tiny = ldexp2(-static_cast<long>(ctx.precision_bits()) / 2, wp);
  std::vector<DiagnosticRow> rows(n_list.size(), DiagnosticRow{0, 0, BigFloat(wp), BigFloat(wp), BigFloat(wp), false});
  const long count = static_cast<long>(n_list.size());
  for_each_index(count, exec, [&](long i) {
    const long n = n_list[i];
    DiagnosticRow& r = rows[i];
    r.n = n;
    r.exact = polys[n](z);
    r.value = BigFloat(r.exact, wp);
    const AsymptoticTerm t = leading_term(ctx, data, n, zf);
    r.leading = t.value;
    r.indeterminate = abs(t.trig) < tiny;
    r.abs_ratio_minus_1 = abs(r.value / r.leading - BigFloat(1, wp));
  });
  return rows;
}

std::string diagnostic_csv(const std::vector<DiagnosticRow>& rows, unsigned precision_bits) {
  const auto out = [&](const BigFloat& x) { return x.with_precision(precision_bits).to_tagged_string(); };
  std::ostringstream os;
  os << "n,exact_value,float_value,leading_term,abs_ratio_minus_1\n";
  for (const auto& r : rows) {
    os << r.n << ',' << to_string(r.exact) << ',' << out(r.value) << ',' << out(r.leading) << ','
       << (r.indeterminate ? std::string("indeterminate") : out(r.abs_ratio_minus_1)) << '\n';
  }
  return os.str();
}

bool decreasing(const std::vector<DiagnosticRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].indeterminate) return false;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if ((rows[j].n - rows[i].n) % 2 != 0) continue;
      if (!(rows[j].abs_ratio_minus_1 < rows[i].abs_ratio_minus_1)) return false;
      break;
    }
  }
  return true;
}

}  // namespace qbern
