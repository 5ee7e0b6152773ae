#include "doctest.h"

#include "qbern/context.hpp"
#include "qbern/errors.hpp"
#include "qbern/qcore.hpp"

using namespace qbern;

namespace {

QContext ctx_q(long p, long r) { return QContext::from_q(make_rational(p, r), 0); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("context validation and roots") {
  CHECK_THROWS_AS(QContext::from_q(1, 0), DomainError);
  CHECK_THROWS_AS(QContext::from_q(make_rational(1, 2), -1), DomainError);
  CHECK(QContext::from_q(make_rational(1, 16), 0).root_index() == 4);
  CHECK(QContext::from_q(make_rational(1, 4), 0).root_index() == 2);
  CHECK(QContext::from_q(make_rational(1, 2), 0).root_index() == 1);

  const auto c = QContext::from_q(make_rational(1, 4), 0);
  CHECK(c.pow_quarters(2) == make_rational(1, 2));
  CHECK_THROWS_AS(c.pow_quarters(1), ExactModeError);
  CHECK(c.pow(make_rational(-3, 2)) == 8);

  const auto frac = QContext::from_q(make_rational(1, 2), make_rational(1, 3));
  CHECK_FALSE(frac.exact_alpha());
  CHECK_THROWS_AS(frac.require_exact_alpha("x"), ExactModeError);
}

TEST_CASE("q_int") {
  CHECK(q_int(ctx_q(1, 2), 3) == make_rational(7, 4));
  CHECK(q_int(ctx_q(1, 2), 0) == 0);
  CHECK(q_int(ctx_q(1, 3), 2) == make_rational(4, 3));
  const auto c = ctx_q(3, 7);
  for (long n = 0; n <= 20; ++n) CHECK((1 - c.q()) * q_int(c, n) == 1 - c.pow_int(n));
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(ctx_q(1, 2), 0) == 1);
  CHECK(q_factorial(ctx_q(1, 2), 2) == make_rational(3, 2));
  const auto c = ctx_q(1, 2);
  CHECK(q_factorial(c, 3) == q_int(c, 1) * q_int(c, 2) * q_int(c, 3));
  CHECK(q_factorial(c, 3) == make_rational(21, 8));
}

TEST_CASE("q_binomial") {
  CHECK(q_binomial(ctx_q(1, 3), 2, 1) == make_rational(4, 3));
  CHECK(q_binomial(ctx_q(1, 3), 3, 5) == 0);
  CHECK(q_binomial(ctx_q(1, 3), 0, 0) == 1);
  const auto c = ctx_q(1, 2);
  CHECK(q_binomial(c, 4, 2) == q_factorial(c, 4) / (q_factorial(c, 2) * q_factorial(c, 2)));
  CHECK(q_binomial(c, 4, 2) == make_rational(35, 16));
  CHECK(q_binomial(c, 4, 2) == 1 + c.q() + 2 * c.pow_int(2) + c.pow_int(3) + c.pow_int(4));
}

TEST_CASE("q-Pascal rule for n <= 20") {
  for (const auto& c : {ctx_q(1, 2), ctx_q(2, 5), ctx_q(9, 16)}) {
    for (long n = 2; n <= 20; ++n)
      for (long k = 1; k <= n - 1; ++k)
        REQUIRE(q_binomial(c, n, k) == q_binomial(c, n - 1, k - 1) + c.pow_int(k) * q_binomial(c, n - 1, k));
  }
}

TEST_CASE("q_pochhammer") {
  const Rational half = make_rational(1, 2);
  CHECK(q_pochhammer(make_rational(5, 3), half, 0) == 1);
  CHECK(q_pochhammer(half, half, 2) == make_rational(3, 8));
  CHECK(q_pochhammer(make_rational(1, 4), half, 2) == make_rational(21, 32));
  const Rational a = make_rational(-2, 7), base = make_rational(3, 5);
  for (long m = 0; m <= 10; ++m)
    for (long n = 0; n <= 10; ++n)
      REQUIRE(q_pochhammer(a, base, m + n) == q_pochhammer(a, base, m) * q_pochhammer(a * pow(base, m), base, n));
}

TEST_CASE("pochhammer_ratio") {
  const Rational base = make_rational(1, 3);
  const Rational c = make_rational(2, 9);
  for (long n = 0; n <= 6; ++n)
    CHECK(pochhammer_ratio(c, base, n) == q_pochhammer(c, base * base, n) / q_pochhammer(c, base, n));
  // c = 1: the first factor is the 0/0 limit; the rest is (1+base^i)
  CHECK(pochhammer_ratio(1, base, 3) == (1 + base) * (1 + base * base));
}

TEST_CASE("q_power") {
  const auto half = QContext::from_quarter_root(make_rational(1, 2), 0);
  CHECK(q_power(half, 4) == make_rational(1, 16));
  CHECK(q_power(half, 0) == 1);
  const auto two_thirds = QContext::from_quarter_root(make_rational(2, 3), 0);
  CHECK(q_power(two_thirds, 6) == make_rational(64, 729));
  CHECK(q_power(two_thirds, -4) == make_rational(81, 16));
}

TEST_CASE("reciprocal base context") {
  const auto c = QContext::from_quarter_root(make_rational(1, 2), 0).reciprocal_base();
  CHECK(c.q() == 16);
  CHECK(c.pow_quarters(1) == 2);
  CHECK(q_int(c, 2) == 17);
}
