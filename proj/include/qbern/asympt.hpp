#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbern/bigfloat.hpp"
#include "qbern/context.hpp"
#include "qbern/detrep.hpp"
#include "qbern/kind.hpp"
#include "qbern/qfun.hpp"
#include "qbern/rational.hpp"

namespace qbern {

struct ZeroResult {
  BigFloat location;
  BigFloat lower;  // the target changes sign on [lower, upper]
  BigFloat upper;
  BigFloat residual;  // |f(location)|
};

/// First positive zero j^{(k)}_{1,α} of x -> 𝒥^{(k)}_α(x; q^2), bisected to
/// about 2^{-(precision_bits+4)}. precision_bits = 0 means ctx.precision_bits().
ZeroResult smallest_zero(const QContext& ctx, Kind kind, unsigned precision_bits = 0);

/// ζ_{1,q}, η_{1,q}, λ_{1,q}, μ_{1,q}: the smallest positive zeros of Sin_q z,
/// Cos_q z, S_q z and C_q(q^{1/2} z).
enum class TrigZero { zeta, eta, lambda, mu };

const char* to_string(TrigZero which);
/// The function whose first positive zero `which` is, evaluated at z.
Enclosure trig_zero_target(const QContext& ctx, TrigZero which, const BigFloat& z);

/// Through j^{(2)}_{1,±1/2} (ζ, η) or j^{(3)}_{1,±1/2} (λ, μ). The bracket is
/// re-certified on the trig function itself and the residual is
/// |target(location)|; throws NumericError if that exceeds 2^{-(precision-16)}.
ZeroResult named_trig_zero(const QContext& ctx, TrigZero which, unsigned precision_bits = 0);
/// Same zero found by searching the trig function directly.
ZeroResult direct_trig_zero(const QContext& ctx, TrigZero which, unsigned precision_bits = 0);

/// d/dz 𝒥^{(k)}_α(z; q^2) at x.
BigFloat bessel_derivative_at(const QContext& ctx, Kind kind, const BigFloat& x);

/// Everything in the leading term that does not depend on n or z.
struct DarbouxData {
  Kind kind;
  ZeroResult zero;      // j^{(k)}_{1,α}
  BigFloat scale;       // ζ_{α,1} (k=2) or η_{α,1} (k=3)
  BigFloat prefactor;   // 2/(1-q) or 4 q^{1/4}/(1-q)
  BigFloat derivative;  // d/dz 𝒥 at the zero
  BigFloat cos_scale;   // Cos_q(scale) or C_q(scale)
  BigFloat sin_scale;   // Sin_q(scale) or S_q(scale)
  QTrigKind cos_kind;
  QTrigKind sin_kind;
};

DarbouxData darboux_data(const QContext& ctx, Kind kind);

struct AsymptoticTerm {
  long index;  // polynomial degree m
  bool even;
  BigFloat value;
  BigFloat prefactor;
  BigFloat factorial;    // ±[m]_q!, sign included
  BigFloat trig;         // the Cos/Sin combination in the numerator
  BigFloat power;        // (2 scale)^{m+1}
  BigFloat derivative;
};

/// Leading Darboux term of B^{(k)}_{m,α}(z;q), k ∈ {2,3}, m >= 1.
AsymptoticTerm leading_term(const QContext& ctx, Kind kind, long m, const BigFloat& z);
AsymptoticTerm leading_term(const QContext& ctx, const DarbouxData& data, long m, const BigFloat& z);

/// The z = 0 specialisation written out for the Bernoulli numbers.
BigFloat number_corollary(const QContext& ctx, const DarbouxData& data, long m);

/// Leading terms of the classical q-Bernoulli/Euler polynomials as stated for
/// α = ±1/2: B_n and E_n (second kind), B̃_n and Ẽ_n (third kind).
enum class ClassicalFamily { bernoulli, euler, bernoulli_tilde, euler_tilde };
BigFloat classical_corollary(const QContext& ctx, ClassicalFamily family, long m, const BigFloat& z);

struct DiagnosticRow {
  long n;
  Rational exact;
  BigFloat value;
  BigFloat leading;
  BigFloat abs_ratio_minus_1;
  bool indeterminate;
};

/// |B_n(z)/leading_term - 1| with B_n from the determinant representation.
std::vector<DiagnosticRow> ratio_diagnostic(const QContext& ctx, Kind kind, const Rational& z,
                                            const std::vector<long>& n_list, Exec exec = Exec::parallel);

/// CSV: n,exact_value,float_value,leading_term,abs_ratio_minus_1, decimals
/// rounded to `precision_bits` and tagged with it.
std::string diagnostic_csv(const std::vector<DiagnosticRow>& rows, unsigned precision_bits);

/// Within each parity class of n, every entry is below the previous one.
bool decreasing(const std::vector<DiagnosticRow>& rows);

}  // namespace qbern
