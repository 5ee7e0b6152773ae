#include "doctest.h"

#include <random>

#include "qbern/detrep.hpp"
#include "qbern/errors.hpp"
#include "qbern/qcore.hpp"
#include "qbern/series.hpp"

using namespace qbern;

namespace {

constexpr Kind kKinds[] = {Kind::first, Kind::second, Kind::third};

Rational laplace(const ExactMatrix& m) {
  if (m.size() == 1) return m[0][0];
  Rational acc(0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    ExactMatrix sub;
    for (std::size_t i = 1; i < m.size(); ++i) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < m.size(); ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(row);
    }
    acc += (j % 2 ? -1 : 1) * m[0][j] * laplace(sub);
  }
  return acc;
}

PolyZ z_minus_half() { return PolyZ({make_rational(-1, 2), Rational(1)}); }

}  // namespace

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-6, 6);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      ExactMatrix m(n, std::vector<Rational>(n));
      for (auto& row : m)
        for (auto& x : row) x = trial % 3 == 0 && d(rng) > 2 ? Rational(0) : make_rational(d(rng), 1 + (d(rng) & 3));
      REQUIRE(determinant(m) == laplace(m));
    }
  }
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("mu values") {
  const auto c = QContext::from_q(make_rational(1, 2), make_rational(1, 2));
  for (Kind k : kKinds) {
    const auto cc = k == Kind::third ? QContext::from_q(make_rational(1, 4), make_rational(1, 2)) : c;
    CHECK(mu(cc, k, 0) == 1);
    CHECK(mu(cc, k, 1) == make_rational(1, 2));
  }
  CHECK(mu(c, Kind::first, 2) == make_rational(15, 56));
  CHECK(mu(c, Kind::second, 2) == make_rational(15, 56));
  const auto deg = QContext::from_q(make_rational(1, 4), make_rational(-1, 2));
  CHECK(mu(deg, Kind::first, 3) == pochhammer_ratio(1, deg.q(), 3) / 8);
  CHECK_THROWS_AS(mu(c.with_alpha(make_rational(1, 3)), Kind::first, 2), ExactModeError);
}

TEST_CASE("mu as Taylor coefficients of g(it) over the exponential") {
  for (auto qv : {make_rational(1, 16), make_rational(9, 16)}) {
    for (auto alpha : {make_rational(-1, 2), Rational(0), Rational(1)}) {
      const auto c = QContext::from_q(qv, alpha);
      for (Kind k : kKinds) {
        const long N = 10;
        const auto s = series_mul(gf_denominator(c, k, N),
                                  series_reciprocal(qexp_series(c, exp_family(k), make_rational(-1, 2), N)));
        const auto mus = mu_table(c, k, N);
        for (long m = 0; m <= N; ++m) REQUIRE(mus[m] == s[m] * q_factorial(c, m));
      }
    }
  }
}

TEST_CASE("build_matrix layout") {
  const auto c = QContext::from_q(make_rational(1, 4), make_rational(1, 2));
  const auto l1 = build_matrix(c, Kind::first, 1);
  CHECK(l1.rows == ExactMatrix{{1, make_rational(1, 2)}});
  CHECK(l1.weights == std::vector<Rational>{1, 1});
  CHECK(build_matrix(c, Kind::second, 1).rows == l1.rows);
  CHECK(build_matrix(c, Kind::second, 1).weights == std::vector<Rational>{1, 1});
  for (Kind k : kKinds) {
    const long n = 5;
    const auto l = build_matrix(c, k, n);
    CHECK(l.rows[n - 1][n] == q_int(c, n) / 2);
    CHECK(l.rows[n - 1][0] == 0);
    for (long i = 1; i <= n; ++i) CHECK(l.rows[i - 1][i - 1] == 1);
  }
  CHECK(build_matrix(c, Kind::third, 3).weights[3] == c.pow_quarters(6));
  CHECK(build_matrix(c, Kind::second, 3).weights[3] == c.pow_int(3));
}

TEST_CASE("low-degree polynomials") {
  const auto c = QContext::from_q(make_rational(1, 4), make_rational(1, 2));
  CHECK(bernoulli_poly_det(c, Kind::first, 0) == PolyZ::constant(1));
  CHECK(bernoulli_poly_det(c, Kind::first, 1) == z_minus_half());
  CHECK(bernoulli_poly_det(c, Kind::second, 1) == z_minus_half());
  CHECK(bernoulli_number(c, Kind::first, 0) == 1);
  CHECK(bernoulli_number(c, Kind::first, 1) == make_rational(-1, 2));
  CHECK(bernoulli_number(c, Kind::third, 1) == make_rational(-1, 2));
}

TEST_CASE("determinant path matches generating function") {
  for (auto qv : {make_rational(1, 16), make_rational(1, 4)}) {
    for (auto alpha : {make_rational(-1, 2), make_rational(1, 2)}) {
      const auto c = QContext::from_q(qv, alpha);
      for (Kind k : kKinds) {
        const auto oracle = oracle_bernoulli_table(c, k, 7);
        const auto det = bernoulli_poly_det_table(c, k, 7);
        for (long n = 0; n <= 7; ++n) REQUIRE(det[n] == oracle[n]);
      }
    }
  }
}

TEST_CASE("serial and parallel paths agree") {
  const auto c = QContext::from_q(make_rational(9, 16), 1);
  for (Kind k : kKinds) {
    CHECK(bernoulli_poly_det(c, k, 9, Exec::serial) == bernoulli_poly_det(c, k, 9, Exec::parallel));
    CHECK(bernoulli_poly_det_table(c, k, 8, Exec::serial) == bernoulli_poly_det_table(c, k, 8, Exec::parallel));
  }
}

TEST_CASE("numbers are polynomials at zero; first and second kind agree") {
  const auto c = QContext::from_q(make_rational(1, 4), 0);
  for (Kind k : kKinds)
    for (long n = 0; n <= 8; ++n) CHECK(bernoulli_number(c, k, n) == bernoulli_poly_det(c, k, n)(0));
  for (long n = 0; n <= 10; ++n) CHECK(bernoulli_number(c, Kind::first, n) == bernoulli_number(c, Kind::second, n));
}

TEST_CASE("second kind from first kind under q -> 1/q") {
  const auto c = QContext::from_q(make_rational(1, 16), make_rational(1, 2));
  const auto inv = c.reciprocal_base();
  for (long n = 0; n <= 6; ++n)
    CHECK(bernoulli_poly_det(c, Kind::second, n) == bernoulli_poly_det(inv, Kind::first, n) * c.pow_quarters(2 * n * (n - 1)));
}
