#include "doctest.h"

#include "qbern/errors.hpp"
#include "qbern/qops.hpp"

using namespace qbern;

namespace {

PolyZ P(std::initializer_list<Rational> c) { return PolyZ(std::vector<Rational>(c)); }

}  // namespace

TEST_CASE("dq") {
  const auto half = QContext::from_q(make_rational(1, 2), 0);
  CHECK(dq(half, PolyZ::monomial(1, 3)) == PolyZ::monomial(make_rational(7, 4), 2));
  CHECK(dq(half, PolyZ::constant(5)).is_zero());
  const auto third = QContext::from_q(make_rational(1, 3), 0);
  CHECK(dq(third, P({0, -1, 1})) == P({-1, make_rational(4, 3)}));
}

TEST_CASE("dq_inverse_base") {
  const auto half = QContext::from_q(make_rational(1, 2), 0);
  CHECK(dq_inverse_base(half, PolyZ::monomial(1, 2)) == PolyZ::monomial(3, 1));
  CHECK(dq_inverse_base(half, PolyZ::constant(2)).is_zero());
  CHECK(dq_inverse_base(half, PolyZ::monomial(1, 1)) == PolyZ::constant(1));
  // agrees with dq evaluated in the base-1/q context
  const PolyZ p = P({1, 2, 3, 4, 5});
  CHECK(dq_inverse_base(half, p) == dq(half.reciprocal_base(), p));
  const PolyZ lin = P({make_rational(2, 7), 9});
  CHECK(dq_inverse_base(half, lin) == dq(half, lin));
}

TEST_CASE("delta_q") {
  const auto quarter = QContext::from_q(make_rational(1, 4), 0);
  CHECK(delta_q(quarter, PolyZ::monomial(1, 2)) == PolyZ::monomial(make_rational(5, 2), 1));
  CHECK(delta_q(quarter, PolyZ::monomial(1, 1)) == PolyZ::constant(1));
  CHECK(delta_q(quarter, PolyZ::monomial(1, 3)) == PolyZ::monomial(make_rational(21, 4), 2));
  // symmetric quotient (q^{n/2} - q^{-n/2})/(q^{1/2} - q^{-1/2}) directly
  for (long n = 1; n <= 8; ++n) {
    const Rational s = quarter.pow_quarters(2);
    const Rational expected = (pow(s, n) - pow(s, -n)) / (s - 1 / s);
    CHECK(delta_q(quarter, PolyZ::monomial(1, n)) == PolyZ::monomial(expected, n - 1));
  }
  CHECK_THROWS_AS(delta_q(QContext::from_q(make_rational(1, 2), 0), PolyZ::monomial(1, 2)), ExactModeError);
}

TEST_CASE("appell_check") {
  const auto c = QContext::from_q(make_rational(1, 4), make_rational(1, 2));
  for (Kind k : {Kind::first, Kind::second, Kind::third}) {
    const auto report = appell_check(c, k, 8);
    REQUIRE(report.size() == 8);
    for (const auto& e : report) CHECK(e.pass);
  }
  // a sequence that is not q-Appell is reported, not thrown
  CHECK(appell_check(c, Kind::first, 0).empty());
}
