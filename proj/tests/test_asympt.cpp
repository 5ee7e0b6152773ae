#include "doctest.h"

#include "qbern/asympt.hpp"
#include "qbern/errors.hpp"
#include "qbern/qcore.hpp"

using namespace qbern;

namespace {

QContext half(const Rational& alpha = make_rational(1, 2)) { return QContext::from_q(make_rational(1, 2), alpha); }

BigFloat rel_diff(const BigFloat& a, const BigFloat& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST_CASE("smallest zero of the second-kind function") {
  const auto c = half();
  const auto z = smallest_zero(c, Kind::second);
  const mpfr_prec_t wp = c.working_precision();
  CHECK(z.residual < ldexp2(-static_cast<long>(c.precision_bits()) + 8, wp));
  CHECK(z.lower <= z.location);
  CHECK(z.location <= z.upper);
  const auto a = modified_bessel_enclosure(c, Kind::second, 2, z.lower).certain_sign();
  const auto b = modified_bessel_enclosure(c, Kind::second, 2, z.upper).certain_sign();
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a != *b);
  for (int i = 1; i <= 10; ++i) {
    const BigFloat x = z.location * BigFloat(make_rational(i, 11), wp);
    CHECK(modified_bessel_enclosure(c, Kind::second, 2, x).certain_sign() == 1);
  }
  const BigFloat d = bessel_derivative_at(c, Kind::second, z.location);
  CHECK(d.sign() < 0);
  CHECK(abs(d) > BigFloat(make_rational(1, 1000), wp));
  CHECK(abs(bessel_derivative_at(c, Kind::second, ldexp2(-30, wp))) < ldexp2(-28, wp));
}

TEST_CASE("third-kind zero and lower precision") {
  const auto c = QContext::from_q(make_rational(1, 4), 0);
  const auto z64 = smallest_zero(c, Kind::third, 64);
  const auto z128 = smallest_zero(c, Kind::third, 128);
  CHECK(abs(z64.location - z128.location) < ldexp2(-60, 160));
  CHECK(z64.residual < ldexp2(-56, 96));
}

TEST_CASE("first-kind search stays inside its disk") {
  const auto c = half();
  try {
    const auto z = smallest_zero(c, Kind::first, 64);
    CHECK(z.location < BigFloat(2, 96));
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()) == "no zero found in search range");
  }
}

TEST_CASE("named q-trig zeros") {
  const auto c = half();
  const long tol = static_cast<long>(c.precision_bits()) - 16;
  const mpfr_prec_t wp = c.working_precision();
  for (auto w : {TrigZero::zeta, TrigZero::eta, TrigZero::lambda, TrigZero::mu}) {
    const auto r = named_trig_zero(c, w);
    CHECK(r.residual < ldexp2(-tol, wp));
    const auto d = direct_trig_zero(c, w);
    CHECK(abs(r.location - d.location) < ldexp2(-tol, wp));
    const auto sa = trig_zero_target(c, w, r.lower).certain_sign();
    const auto sb = trig_zero_target(c, w, r.upper).certain_sign();
    REQUIRE(sa);
    REQUIRE(sb);
    CHECK(*sa != *sb);
  }
  // ζ_{1,q} and the Bessel zero at α = 1/2
  const auto j = smallest_zero(c, Kind::second);
  const auto zeta = named_trig_zero(c, TrigZero::zeta);
  const BigFloat omq = BigFloat(1, wp) - c.q_float();
  CHECK(abs(zeta.location - j.location / (BigFloat(2, wp) * omq)) < ldexp2(-tol, wp));
  CHECK(abs(eval_qtrig(c, QTrigKind::Sin_q, zeta.location)) < ldexp2(-tol, wp));
}

TEST_CASE("q-trig derivative against difference quotient") {
  const auto c = half();
  const mpfr_prec_t wp = c.working_precision();
  const BigFloat h = ldexp2(-50, wp);
  const BigFloat x(make_rational(7, 5), wp);
  for (auto k : {QTrigKind::Sin_q, QTrigKind::Cos_q, QTrigKind::S_q, QTrigKind::C_q, QTrigKind::sin_q, QTrigKind::cos_q}) {
    const BigFloat fd = (eval_qtrig(c, k, x + h) - eval_qtrig(c, k, x - h)) / (BigFloat(2, wp) * h);
    CHECK(abs(qtrig_derivative_enclosure(c, k, x).mid - fd) < ldexp2(-80, wp));
  }
}

TEST_CASE("leading term structure") {
  const auto c = half();
  const auto data = darboux_data(c, Kind::second);
  const mpfr_prec_t wp = c.working_precision();
  const BigFloat zero(wp);
  for (long m = 1; m <= 12; ++m) {
    const auto t = leading_term(c, data, m, zero);
    CHECK(t.value == number_corollary(c, data, m));
    CHECK(rel_diff(t.prefactor * t.factorial * t.trig / (t.power * t.derivative), t.value) < ldexp2(-150, wp));
    CHECK(t.even == (m % 2 == 0));
  }
  const BigFloat z(make_rational(1, 3), wp);
  for (long m = 2; m <= 10; m += 2)
    CHECK(leading_term(c, data, m, z).value.sign() == -leading_term(c, data, m + 2, z).value.sign());
  CHECK_THROWS(leading_term(c, data, 0, z));
  CHECK_THROWS(darboux_data(c, Kind::first));
}

TEST_CASE("third-kind numbers at z = 0") {
  const auto c = QContext::from_q(make_rational(1, 4), make_rational(1, 2));
  const auto data = darboux_data(c, Kind::third);
  for (long m = 1; m <= 9; ++m) CHECK(leading_term(c, data, m, BigFloat(c.working_precision())).value == number_corollary(c, data, m));
}

TEST_CASE("classical corollaries at q = 1/2 reduce to the theorem") {
  const auto cb = half(make_rational(1, 2));
  const auto ce = half(make_rational(-1, 2));
  const mpfr_prec_t wp = cb.working_precision();
  const BigFloat z(make_rational(1, 5), wp);
  const auto db = darboux_data(cb, Kind::second);
  const auto de = darboux_data(ce, Kind::second);
  for (long m = 3; m <= 6; ++m) {
    CHECK(rel_diff(classical_corollary(cb, ClassicalFamily::bernoulli, m, z), leading_term(cb, db, m, z).value) < ldexp2(-100, wp));
    CHECK(rel_diff(classical_corollary(ce, ClassicalFamily::euler, m, z), leading_term(ce, de, m, z).value) < ldexp2(-100, wp));
  }
}

TEST_CASE("classical corollaries differ from the theorem by constant factors") {
  const auto q = make_rational(1, 4);
  const auto cb = QContext::from_q(q, make_rational(1, 2));
  const auto ce = QContext::from_q(q, make_rational(-1, 2));
  const mpfr_prec_t wp = cb.working_precision();
  const BigFloat z(make_rational(1, 5), wp);
  const BigFloat omq = BigFloat(1, wp) - cb.q_float();
  const BigFloat q14 = cb.pow_float(make_rational(1, 4));
  const auto db2 = darboux_data(cb, Kind::second);
  const auto de2 = darboux_data(ce, Kind::second);
  const auto db3 = darboux_data(cb, Kind::third);
  const auto de3 = darboux_data(ce, Kind::third);
  const long m = 8;
  CHECK(rel_diff(leading_term(cb, db2, m, z).value / classical_corollary(cb, ClassicalFamily::bernoulli, m, z),
                 BigFloat(2, wp) * omq) < ldexp2(-100, wp));
  CHECK(rel_diff(leading_term(ce, de2, m, z).value / classical_corollary(ce, ClassicalFamily::euler, m, z),
                 BigFloat(2, wp) * omq) < ldexp2(-100, wp));
  CHECK(rel_diff(leading_term(cb, db3, m, z).value / classical_corollary(cb, ClassicalFamily::bernoulli_tilde, m, z),
                 omq / q14) < ldexp2(-100, wp));
  // at 2μz = q^{1/2}μ the C_q(2μz) term vanishes and only the constant is left
  const BigFloat zt = ce.pow_float(make_rational(1, 2)) / BigFloat(2, wp);
  CHECK(rel_diff(leading_term(ce, de3, m, zt).value / classical_corollary(ce, ClassicalFamily::euler_tilde, m, zt),
                 omq / (q14 * q14 * q14)) < ldexp2(-100, wp));
  // the dropped factor C_q(μ_{1,q}) is not zero
  CHECK(abs(eval_qtrig(ce, QTrigKind::C_q, named_trig_zero(ce, TrigZero::mu).location)) > BigFloat(1, wp));
}

TEST_CASE("ratio diagnostic") {
  const auto c = half();
  const std::vector<long> ns{4, 6, 8, 10, 12};
  const auto rows = ratio_diagnostic(c, Kind::second, make_rational(1, 4), ns);
  REQUIRE(rows.size() == ns.size());
  CHECK(decreasing(rows));
  for (const auto& r : rows) CHECK(r.exact == bernoulli_poly_det(c, Kind::second, r.n)(make_rational(1, 4)));
  CHECK(ratio_diagnostic(c, Kind::second, make_rational(1, 4), ns, Exec::serial).back().abs_ratio_minus_1 ==
        rows.back().abs_ratio_minus_1);

  const auto at0 = ratio_diagnostic(c, Kind::second, 0, ns);
  const auto data = darboux_data(c, Kind::second);
  for (const auto& r : at0) {
    CHECK(r.leading == number_corollary(c, data, r.n));
    CHECK(r.exact == bernoulli_number(c, Kind::second, r.n));
  }
  const std::string csv = diagnostic_csv(rows, 128);
  CHECK(csv.rfind("n,exact_value,float_value,leading_term,abs_ratio_minus_1\n4,", 0) == 0);
  CHECK(csv.find("@128b") != std::string::npos);
  CHECK(csv.find("@160b") == std::string::npos);

  // odd and even entries are compared within their own parity
  const auto mixed = ratio_diagnostic(QContext::from_q(make_rational(1, 4), make_rational(1, 2)), Kind::third,
                                      make_rational(1, 4), {4, 5, 6, 7, 8, 9});
  CHECK(mixed[1].abs_ratio_minus_1 > mixed[0].abs_ratio_minus_1);
  CHECK(decreasing(mixed));
}
