#include "qbern/qfun.hpp"

#include <functional>
#include <stdexcept>

#include "qbern/errors.hpp"
#include "qbern/qcore.hpp"

namespace qbern {

const char* to_string(QTrigKind kind) {
  switch (kind) {
    case QTrigKind::sin_q: return "sin_q";
    case QTrigKind::cos_q: return "cos_q";
    case QTrigKind::Sin_q: return "Sin_q";
    case QTrigKind::Cos_q: return "Cos_q";
    case QTrigKind::S_q: return "S_q";
    case QTrigKind::C_q: return "C_q";
  }
  return "?";
}

namespace {

constexpr long kMaxTerms = 200000;

// Sums t_0 + t_1 + ... with t_{n+1} = t_n * ratio(n). From n0 on, |ratio(n)|
// must be non-increasing, which makes |t_n| / (1 - |ratio(n)|) a tail bound.
Enclosure sum_ratio_series(BigFloat first, const std::function<BigFloat(long)>& ratio, long n0,
                           mpfr_prec_t wp) {
  const BigFloat eps = ldexp2(-static_cast<long>(wp), wp);
  const BigFloat one(1, wp);
  BigFloat sum = first;
  BigFloat abs_sum = abs(first);
  BigFloat term = std::move(first);
  for (long n = 0; n < kMaxTerms; ++n) {
    const BigFloat r = ratio(n);
    term *= r;
    const BigFloat rho = abs(r);
    if (n + 1 >= n0 && rho < one) {
      const BigFloat tail = abs(term) / (one - rho);
      if (tail <= eps * max(abs_sum, one) || term.is_zero()) {
        const BigFloat rounding = BigFloat(8 * (n + 2), wp) * eps * abs_sum;
        return {sum, tail + rounding};
      }
    }
    sum += term;
    abs_sum += abs(term);
  }
  throw NumericError("series did not converge within the term limit");
}

BigFloat one_minus_power(const BigFloat& base_pow) { return BigFloat(1, base_pow.precision()) - base_pow; }

// Coefficient ratio a_{n+1}/a_n of Σ a_n x^n for the q-exponentials, with
// x = z(1-q) folded in by the caller.
struct QExpRatio {
  QExpFamily family;
  BigFloat q;
  BigFloat weight_step;  // q, sqrt(q) or 1
  mutable BigFloat qpow;   // q^{n+1}
  mutable BigFloat wpow;   // weight_step^n

  QExpRatio(const QContext& ctx, QExpFamily fam)
      : family(fam), q(ctx.q_float()), weight_step(ctx.working_precision()), qpow(q), wpow(1, ctx.working_precision()) {
    switch (fam) {
      case QExpFamily::e_q: weight_step = BigFloat(1, ctx.working_precision()); break;
      case QExpFamily::E_q: weight_step = q; break;
      case QExpFamily::exp_q: weight_step = ctx.pow_float(make_rational(1, 2)); break;
    }
  }
  // Must be called with n = 0, 1, 2, ... in order.
  BigFloat next() const {
    BigFloat r = wpow / one_minus_power(qpow);
    qpow *= q;
    wpow *= weight_step;
    return r;
  }
};

void check_eq_disk(const QContext& ctx, const BigFloat& z, const char* what) {
  const BigFloat x = abs(z) * (BigFloat(1, ctx.working_precision()) - ctx.q_float());
  if (!(x < BigFloat(1, ctx.working_precision())))
    throw DomainError(std::string(what) + " needs |z| < 1/(1-q)");
}

}  // namespace

Enclosure qexp_enclosure(const QContext& ctx, QExpFamily family, const BigFloat& z) {
  const mpfr_prec_t wp = ctx.working_precision();
  if (family == QExpFamily::e_q) check_eq_disk(ctx, z, "e_q");
  const BigFloat x = z.with_precision(wp) * (BigFloat(1, wp) - ctx.q_float());
  QExpRatio gen(ctx, family);
  return sum_ratio_series(BigFloat(1, wp), [&](long) { return gen.next() * x; }, 0, wp);
}

BigFloat eval_eq(const QContext& ctx, const BigFloat& z) { return qexp_enclosure(ctx, QExpFamily::e_q, z).mid; }
BigFloat eval_Eq(const QContext& ctx, const BigFloat& z) { return qexp_enclosure(ctx, QExpFamily::E_q, z).mid; }
BigFloat eval_expq(const QContext& ctx, const BigFloat& z) { return qexp_enclosure(ctx, QExpFamily::exp_q, z).mid; }

BigFloat eval_Eq_product(const QContext& ctx, const BigFloat& z) {
  const mpfr_prec_t wp = ctx.working_precision();
  const BigFloat x = z.with_precision(wp) * (BigFloat(1, wp) - ctx.q_float());
  const BigFloat eps = ldexp2(-static_cast<long>(wp) - 8, wp);
  BigFloat prod(1, wp), qpow(1, wp);
  const BigFloat q = ctx.q_float();
  for (long m = 0; m < kMaxTerms; ++m) {
    const BigFloat f = x * qpow;
    prod *= BigFloat(1, wp) + f;
    if (abs(f) < eps) return prod;
    qpow *= q;
  }
  throw NumericError("E_q product did not converge");
}

namespace {

QExpFamily trig_family(const QContext& ctx, QTrigKind kind, const BigFloat& z, bool& odd) {
  odd = kind == QTrigKind::sin_q || kind == QTrigKind::Sin_q || kind == QTrigKind::S_q;
  switch (kind) {
    case QTrigKind::sin_q:
    case QTrigKind::cos_q: check_eq_disk(ctx, z, to_string(kind)); return QExpFamily::e_q;
    case QTrigKind::Sin_q:
    case QTrigKind::Cos_q: return QExpFamily::E_q;
    case QTrigKind::S_q:
    case QTrigKind::C_q: return QExpFamily::exp_q;
  }
  throw std::invalid_argument("bad q-trig kind");
}

}  // namespace

Enclosure qtrig_enclosure(const QContext& ctx, QTrigKind kind, const BigFloat& z) {
  const mpfr_prec_t wp = ctx.working_precision();
  bool odd = false;
  const QExpFamily family = trig_family(ctx, kind, z, odd);
  const BigFloat x = z.with_precision(wp) * (BigFloat(1, wp) - ctx.q_float());
  const BigFloat minus_x2 = -(x * x);
  QExpRatio gen(ctx, family);
  BigFloat first(1, wp);
  if (odd) first = gen.next() * x;
  return sum_ratio_series(first, [&](long) {
    BigFloat a = gen.next();
    a *= gen.next();
    return a * minus_x2;
  }, 0, wp);
}

Enclosure qtrig_derivative_enclosure(const QContext& ctx, QTrigKind kind, const BigFloat& z) {
  const mpfr_prec_t wp = ctx.working_precision();
  bool odd = false;
  const QExpFamily family = trig_family(ctx, kind, z, odd);
  const BigFloat omq = BigFloat(1, wp) - ctx.q_float();
  const BigFloat x = z.with_precision(wp) * omq;
  const BigFloat minus_x2 = -(x * x);
  QExpRatio gen(ctx, family);
  // d/dz of (±) a_p x^p is (±) p a_p x^{p-1} (1-q), p = 1, 3, ... or 2, 4, ...
  BigFloat first = gen.next() * omq;
  long p0 = 1;
  if (!odd) {
    first *= gen.next();
    first = -(first * x * BigFloat(2, wp));
    p0 = 2;
  }
  return sum_ratio_series(first, [&](long i) {
    const long p = p0 + 2 * i;
    BigFloat a = gen.next();
    a *= gen.next();
    return a * minus_x2 * BigFloat(p + 2, wp) / BigFloat(p, wp);
  }, 0, wp);
}

BigFloat eval_qtrig(const QContext& ctx, QTrigKind kind, const BigFloat& z) {
  return qtrig_enclosure(ctx, kind, z).mid;
}

namespace {

struct BesselSetup {
  mpfr_prec_t wp;
  BigFloat p;        // q^s
  BigFloat pa1;      // p^{α+1}
  BigFloat y2;       // y^2 with y = z/2 or z
  BigFloat wstep0;   // weight ratio at n = 0
  BigFloat wstep_mul;
};

BesselSetup bessel_setup(const QContext& ctx, Kind kind, int base_exponent, const BigFloat& z) {
  if (base_exponent != 1 && base_exponent != 2) throw std::invalid_argument("base exponent must be 1 or 2");
  const mpfr_prec_t wp = ctx.working_precision();
  const Rational s(base_exponent);
  BesselSetup b{wp, ctx.pow_float(s), ctx.pow_float(s * (ctx.alpha() + 1)), BigFloat(wp), BigFloat(1, wp), BigFloat(1, wp)};
  BigFloat y = z.with_precision(wp);
  if (kind != Kind::third) y /= BigFloat(2, wp);
  b.y2 = y * y;
  if (kind == Kind::first && !(abs(z) < BigFloat(2, wp)))
    throw DomainError("first Jackson q-Bessel function needs |z| < 2");
  switch (kind) {
    case Kind::first: break;
    case Kind::second:  // p^{α+2n+1}
      b.wstep0 = ctx.pow_float(s * (ctx.alpha() + 1));
      b.wstep_mul = b.p * b.p;
      break;
    case Kind::third:  // p^{n+1}
      b.wstep0 = b.p;
      b.wstep_mul = b.p;
      break;
  }
  return b;
}

// ratio u_{n+1}/u_n, called in order n = 0, 1, ...
struct BesselRatio {
  const BesselSetup& s;
  BigFloat pn1;   // p^{n+1}
  BigFloat pan;   // p^{α+1+n}
  BigFloat wstep;
  explicit BesselRatio(const BesselSetup& setup) : s(setup), pn1(setup.p), pan(setup.pa1), wstep(setup.wstep0) {}
  BigFloat next() {
    const BigFloat one(1, s.wp);
    BigFloat r = -(wstep * s.y2) / ((one - pn1) * (one - pan));
    pn1 *= s.p;
    pan *= s.p;
    wstep *= s.wstep_mul;
    return r;
  }
};

}  // namespace

Enclosure modified_bessel_enclosure(const QContext& ctx, Kind kind, int base_exponent, const BigFloat& z) {
  const BesselSetup s = bessel_setup(ctx, kind, base_exponent, z);
  BesselRatio gen(s);
  return sum_ratio_series(BigFloat(1, s.wp), [&](long) { return gen.next(); }, 0, s.wp);
}

BigFloat eval_modified_bessel(const QContext& ctx, Kind kind, int base_exponent, const BigFloat& z) {
  return modified_bessel_enclosure(ctx, kind, base_exponent, z).mid;
}

Enclosure modified_bessel_derivative_enclosure(const QContext& ctx, Kind kind, int base_exponent,
                                               const BigFloat& z) {
  const BesselSetup s = bessel_setup(ctx, kind, base_exponent, z);
  if (z.is_zero()) return {BigFloat(s.wp), BigFloat(s.wp)};
  BesselRatio gen(s);
  // v_n = 2n u_n / z; v_1 = 2 r_0 / z with the z^2 inside r_0 cancelled once.
  BigFloat first = gen.next() * BigFloat(2, s.wp) / z.with_precision(s.wp);
  return sum_ratio_series(first, [&](long n) {
    const long m = n + 1;
    return gen.next() * BigFloat(m + 1, s.wp) / BigFloat(m, s.wp);
  }, 0, s.wp);
}

BigFloat eval_bessel(const QContext& ctx, Kind kind, int base_exponent, const BigFloat& z) {
  const mpfr_prec_t wp = ctx.working_precision();
  if (z.sign() < 0 && !is_integer(ctx.alpha()))
    throw DomainError("J_alpha at negative argument needs integral alpha");
  const BigFloat series = eval_modified_bessel(ctx, kind, base_exponent, z);
  const Rational s(base_exponent);
  const BigFloat p = ctx.pow_float(s);
  const BigFloat eps = ldexp2(-static_cast<long>(wp) - 8, wp);
  BigFloat pref(1, wp), pa = ctx.pow_float(s * (ctx.alpha() + 1)), pk = p;
  for (long m = 0; m < kMaxTerms && (pa > eps || pk > eps); ++m) {
    pref *= (BigFloat(1, wp) - pa) / (BigFloat(1, wp) - pk);
    pa *= p;
    pk *= p;
  }
  BigFloat y = z.with_precision(wp);
  if (kind != Kind::third) y /= BigFloat(2, wp);
  BigFloat ya(1, wp);
  if (is_integer(ctx.alpha())) ya = pow(y, ctx.alpha().get_num().get_si());
  else ya = pow(y, BigFloat(ctx.alpha(), wp));
  return pref * ya * series;
}

namespace {

Rational hypergeometric_sum(const QContext& ctx, const std::vector<Rational>& upper,
                            const std::vector<Rational>& lower, const Rational& x,
                            std::optional<long> n_terms) {
  const Rational q = ctx.q();
  Rational term(1), sum(1);
  const long limit = n_terms.value_or(kMaxTerms);
  for (long m = 0; m < limit; ++m) {
    const Rational qm = ctx.pow_int(m);
    Rational num = x;
    for (const auto& a : upper) num *= 1 - a * qm;
    if (num == 0) return sum;
    Rational den = 1 - q * qm;
    for (const auto& b : lower) den *= 1 - b * qm;
    if (den == 0) throw DomainError("vanishing lower-parameter Pochhammer factor");
    term *= num / den;
    sum += term;
  }
  if (!n_terms) throw std::invalid_argument("series does not terminate");
  return sum;
}

}  // namespace

Rational phi21(const QContext& ctx, const Rational& a, const Rational& b, const Rational& c,
               const Rational& x, long n_terms) {
  if (n_terms < 0) throw std::invalid_argument("phi21: negative term count");
  return hypergeometric_sum(ctx, {a, b}, {c}, x, n_terms);
}

Rational phi32(const QContext& ctx, const Rational& a1, const Rational& a2, const Rational& a3,
               const Rational& b1, const Rational& b2, const Rational& x, std::optional<long> n_terms) {
  if (n_terms && *n_terms < 0) throw std::invalid_argument("phi32: negative term count");
  if (!n_terms) {
    bool terminates = false;
    for (const auto& a : {a1, a2, a3}) {
      Rational inv = 1 / a;
      for (long n = 0; n < 4096 && !terminates; ++n) {
        if (inv == ctx.pow_int(n)) terminates = true;
        if (ctx.pow_int(n) < inv) break;
      }
    }
    if (!terminates) throw std::invalid_argument("phi32: no terminating upper parameter; give a term count");
  }
  return hypergeometric_sum(ctx, {a1, a2, a3}, {b1, b2}, x, n_terms ? std::optional<long>(*n_terms) : std::nullopt);
}

namespace {

void compositions(long remaining, int sign, const Rational& acc, long quarters,
                  const std::vector<Rational>& inv_fact, const QContext& ctx, Rational& out) {
  if (remaining == 0) {
    const Rational v = acc * ctx.pow_quarters(quarters);
    if (sign > 0) out += v;
    else out -= v;
    return;
  }
  for (long s = 1; s <= remaining; ++s)
    compositions(remaining - s, -sign, acc * inv_fact[s], quarters + s * (s - 1), inv_fact, ctx, out);
}

}  // namespace

std::vector<Rational> recip_expq_coeffs(const QContext& ctx, long n_max) {
  if (n_max < 0) throw std::invalid_argument("recip_expq_coeffs: negative order");
  std::vector<Rational> inv_fact(n_max + 1);
  for (long s = 0; s <= n_max; ++s) inv_fact[s] = 1 / q_factorial(ctx, s);
  std::vector<Rational> c(n_max + 1);
  c[0] = 1;
  for (long n = 1; n <= n_max; ++n) compositions(n, 1, Rational(1), 0, inv_fact, ctx, c[n]);
  return c;
}

}  // namespace qbern
