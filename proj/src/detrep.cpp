#include "qbern/detrep.hpp"

#include <stdexcept>

#include "qbern/qcore.hpp"
#include "qbern/series.hpp"

namespace qbern {

std::vector<Rational> mu_table(const QContext& ctx, Kind kind, long m_max) {
  ctx.require_exact_alpha("mu");
  if (m_max < 0) throw std::invalid_argument("mu: negative index");
  std::vector<Rational> out(m_max + 1);
  const Rational q = ctx.q();
  if (kind != Kind::third) {
    const Rational c = ctx.pow(2 * ctx.alpha() + 1);
    Rational ratio(1), half(1);
    for (long m = 0; m <= m_max; ++m) {
      if (m > 0) half /= 2;
      // the i = 0 factor is 1 (its 0/0 limit when c = 1)
      if (m > 1) ratio *= (1 - c * ctx.pow_int(2 * (m - 1))) / (1 - c * ctx.pow_int(m - 1));
      out[m] = half * ratio;
    }
    return out;
  }
  const ScalarSeries exp_series = qexp_series(ctx, QExpFamily::exp_q, 1, m_max);
  const ScalarSeries c = series_reciprocal(exp_series);  // c_n of 1/exp_q
  const Rational q2 = q * q;
  const Rational a2 = ctx.pow(2 * ctx.alpha() + 2);
  std::vector<Rational> inner(m_max / 2 + 1);
  Rational p1(1), p2(1), omq2j(1);
  for (long j = 0; 2 * j <= m_max; ++j) {
    if (j > 0) {
      p1 *= 1 - pow(q2, j);
      p2 *= 1 - a2 * pow(q2, j - 1);
      omq2j *= (1 - q) * (1 - q);
    }
    inner[j] = ctx.pow_quarters(4 * j * j + 2 * j) * omq2j / (p1 * p2);
  }
  Rational fact(1), half(1);
  for (long m = 0; m <= m_max; ++m) {
    if (m > 0) {
      fact *= q_int(ctx, m);
      half /= 2;
    }
    Rational s(0);
    for (long j = 0; 2 * j <= m; ++j) s += inner[j] * c[m - 2 * j];
    out[m] = (m % 2 ? -1 : 1) * fact * half * s;
  }
  return out;
}

Rational mu(const QContext& ctx, Kind kind, long m) { return mu_table(ctx, kind, m).back(); }

namespace {

Rational row_weight(const QContext& ctx, Kind kind, long j) {
  switch (kind) {
    case Kind::first: return 1;
    case Kind::second: return ctx.pow_quarters(2 * j * (j - 1));
    case Kind::third: return ctx.pow_quarters(j * (j - 1));
  }
  throw std::invalid_argument("bad kind");
}

ExactMatrix scalar_rows(const QContext& ctx, long n, const std::vector<Rational>& mus) {
  ExactMatrix rows(n, std::vector<Rational>(n + 1));
  for (long i = 1; i <= n; ++i)
    for (long j = i - 1; j <= n; ++j) rows[i - 1][j] = q_binomial(ctx, j, i - 1) * mus[j - i + 1];
  return rows;
}

}  // namespace

DeterminantLayout build_matrix(const QContext& ctx, Kind kind, long n) {
  if (n < 0) throw std::invalid_argument("build_matrix: negative degree");
  DeterminantLayout layout{kind, n, {}, {}};
  const auto mus = mu_table(ctx, kind, n);
  for (long j = 0; j <= n; ++j) layout.weights.push_back(row_weight(ctx, kind, j));
  layout.rows = scalar_rows(ctx, n, mus);
  return layout;
}

Rational determinant(const ExactMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("determinant: matrix is not square");
    Integer l = 1;
    for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
    scale *= l;
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

namespace {

ExactMatrix drop_column(const ExactMatrix& rows, std::size_t col) {
  ExactMatrix out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].reserve(rows[i].size() - 1);
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (j != col) out[i].push_back(rows[i][j]);
  }
  return out;
}

PolyZ assemble(const DeterminantLayout& layout, const std::vector<Rational>& minors) {
  std::vector<Rational> coeffs(layout.n + 1);
  for (long j = 0; j <= layout.n; ++j) {
    const bool negative = ((layout.n + j) % 2) != 0;
    coeffs[j] = layout.weights[j] * minors[j];
    if (negative) coeffs[j] = -coeffs[j];
  }
  return PolyZ(std::move(coeffs));
}

}  // namespace

std::vector<Rational> column_minors(const DeterminantLayout& layout, Exec exec) {
  const long cols = layout.n + 1;
  std::vector<Rational> minors(cols);
  for_each_index(cols, exec, [&](long j) { minors[j] = determinant(drop_column(layout.rows, j)); });
  return minors;
}

PolyZ bernoulli_poly_det(const QContext& ctx, Kind kind, long n, Exec exec) {
  if (n == 0) {
    ctx.require_exact_alpha("bernoulli_poly_det");
    return PolyZ::constant(1);
  }
  const DeterminantLayout layout = build_matrix(ctx, kind, n);
  return assemble(layout, column_minors(layout, exec));
}

std::vector<PolyZ> bernoulli_poly_det_table(const QContext& ctx, Kind kind, long n_max, Exec exec) {
  if (n_max < 0) throw std::invalid_argument("bernoulli_poly_det_table: negative degree");
  ctx.require_exact_alpha("bernoulli_poly_det");
  std::vector<PolyZ> out(n_max + 1);
  // largest first so the tail of the schedule is cheap
  for_each_index(n_max + 1, exec,
                 [&](long i) { out[n_max - i] = bernoulli_poly_det(ctx, kind, n_max - i, Exec::serial); });
  return out;
}

Rational bernoulli_number(const QContext& ctx, Kind kind, long n) {
  if (n == 0) {
    ctx.require_exact_alpha("bernoulli_number");
    return 1;
  }
  const DeterminantLayout layout = build_matrix(ctx, kind, n);
  ExactMatrix block(n);
  for (long i = 0; i < n; ++i) block[i].assign(layout.rows[i].begin() + 1, layout.rows[i].end());
  const Rational d = determinant(block);
  return n % 2 ? Rational(-d) : d;
}

}  // namespace qbern
