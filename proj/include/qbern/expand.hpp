#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbern/bigfloat.hpp"
#include "qbern/context.hpp"
#include "qbern/detrep.hpp"
#include "qbern/poly.hpp"
#include "qbern/rational.hpp"

namespace qbern {

/// Taylor coefficients f_0..f_M of an entire function and what is known
/// beyond M. A finite stream is zero past M. A geometric stream promises
/// |f_k/Ψ_k| <= |f_M/Ψ_M| r^{k-M} for k > M.
struct CoefficientStream {
  std::vector<Rational> coefficients;
  std::optional<Rational> geometric_ratio;

  bool finite() const { return !geometric_ratio.has_value(); }
  long last_index() const { return static_cast<long>(coefficients.size()) - 1; }
  /// f_k; zero beyond M.
  Rational at(long k) const;

  static CoefficientStream from_poly(const PolyZ& p);
  static CoefficientStream geometric(std::vector<Rational> coefficients, const Rational& ratio);
};

/// Ψ_n = q^{n(n-1)/2}/[n]_q!.
Rational psi(const QContext& ctx, long n);

/// max_{lo<=n<=hi, n>=1} |f_n/Ψ_n|^{1/n}. Indices past M are allowed for
/// finite streams only.
BigFloat tau_estimate(const QContext& ctx, const CoefficientStream& stream, long lo, long hi);

struct GrowthVerdict {
  BigFloat K;       // max_n |f_n| q^{-(n-γ)^2/(2k)} over the stored coefficients
  long argmax;      // -1 for the zero stream
  std::optional<BigFloat> tau_bound;  // q^{1/2-γ}/(1-q) when k = 1
  std::string advisory;
};

GrowthVerdict growth_classify(const QContext& ctx, const CoefficientStream& stream,
                              const Rational& order, const Rational& gamma);

/// L_0..L_N of the B^{(2)} expansion. `values` are exact sums over the stored
/// coefficients; `tail_bounds[n]` bounds the omitted part (zero when finite).
struct LCoefficients {
  std::vector<Rational> values;
  std::vector<BigFloat> tail_bounds;
  bool exact = true;
};

/// Weight of f_k in L_n, j = k - n, without the (1-q)^{-n} q^{-k(k-1)/2}(q;q)_k part:
/// (q^{2α+1};q^2)_j 2^{-j} / ((q;q)_j (q^{2α+1};q)_j).
Rational l_weight(const QContext& ctx, long j);

/// Throws DomainError "cannot truncate" unless the geometric ratio is < 2/(1-q).
LCoefficients l_coefficients(const QContext& ctx, const CoefficientStream& stream, long n_max,
                             Exec exec = Exec::parallel);
/// Same sums through μ^{(2)}: L_n = Σ_k (f_k/Ψ_k) μ_{k-n}/[k-n]_q!.
std::vector<Rational> l_coefficients_mu(const QContext& ctx, const CoefficientStream& stream, long n_max);

/// 1/((q;q)_∞ (q^{2α+2};q)_∞) rounded up: (1-q)^j l_weight(j) <= bound ((1-q)/2)^j for all j.
BigFloat l_weight_bound(const QContext& ctx);

/// Σ_{n<=N} L_n B^{(2)}_{n,α}(z;q)/[n]_q!.
PolyZ reconstruct_exact(const QContext& ctx, const LCoefficients& l);
BigFloat reconstruct(const QContext& ctx, const CoefficientStream& stream, const BigFloat& z, long n_max);

/// reconstruct_exact(...) equals the stream's polynomial.
bool exact_identity(const QContext& ctx, const CoefficientStream& stream, long n_max);

enum class CorollaryVariant { bernoulli, euler };

const char* to_string(CorollaryVariant v);
Rational corollary_alpha(CorollaryVariant v);
/// Closed-form weight at α = 1/2: (-q;q)_j 2^{-j}/(q^2;q)_j.
/// At α = -1/2: (-q;q)_{j-1} 2^{-j}/(q;q)_j, i.e. (-1;q)_j 2^{-j-1}/(q;q)_j for j >= 1.
Rational corollary_weight(const QContext& ctx, CorollaryVariant v, long j);
/// The α = -1/2 weight read literally as (-1;q)_j 2^{-j}/(q;q)_j.
Rational corollary_weight_literal(const QContext& ctx, CorollaryVariant v, long j);

/// l_coefficients at the fixed α with the closed-form weight.
std::vector<Rational> corollary_wrappers(const QContext& ctx, const CoefficientStream& stream,
                                         CorollaryVariant v, long n_max);

/// Coefficients of (z;q)_n.
CoefficientStream qpochhammer_stream(const QContext& ctx, long n);

/// L_0..L_n of (z;q)_n against (-1)^n [n]_q! ₃φ₂(q^{-n}, q^{α+1/2}, -q^{α+1/2}; q^{2α+1}, q; q, q(1-q)/2).
struct PochhammerComparison {
  long n;
  std::vector<Rational> l;
  Rational closed_form;
  std::vector<long> matching;  // indices m with L_m == closed_form
};

PochhammerComparison pochhammer_comparison(const QContext& ctx, long n);

}  // namespace qbern
