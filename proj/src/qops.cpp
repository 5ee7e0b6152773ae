#include "qbern/qops.hpp"

#include "qbern/qcore.hpp"

namespace qbern {

namespace {

template <class Factor>
PolyZ lower_degree(const PolyZ& p, Factor factor) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(p.degree());
  for (long n = 1; n <= p.degree(); ++n) out[n - 1] = factor(n) * p.coefficient(n);
  return PolyZ(std::move(out));
}

}  // namespace

PolyZ dq(const QContext& ctx, const PolyZ& p) {
  return lower_degree(p, [&](long n) -> Rational { return q_int(ctx, n); });
}

PolyZ dq_inverse_base(const QContext& ctx, const PolyZ& p) {
  return lower_degree(p, [&](long n) -> Rational { return ctx.pow_int(1 - n) * q_int(ctx, n); });
}

PolyZ delta_q(const QContext& ctx, const PolyZ& p) {
  return lower_degree(p, [&](long n) -> Rational { return ctx.pow_quarters(2 * (1 - n)) * q_int(ctx, n); });
}

std::vector<AppellEntry> appell_check(const QContext& ctx, Kind kind, long n_max, Exec exec) {
  std::vector<AppellEntry> report;
  if (n_max < 1) return report;
  const auto polys = bernoulli_poly_det_table(ctx, kind, n_max, exec);
  for (long n = 1; n <= n_max; ++n) {
    PolyZ lhs;
    switch (kind) {
      case Kind::first: lhs = dq(ctx, polys[n]); break;
      case Kind::second: lhs = dq_inverse_base(ctx, polys[n]); break;
      case Kind::third: lhs = delta_q(ctx, polys[n]); break;
    }
    report.push_back({kind, n, lhs == polys[n - 1] * q_int(ctx, n)});
  }
  return report;
}

}  // namespace qbern
