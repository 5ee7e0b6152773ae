#pragma once

#include <optional>
#include <vector>

#include "qbern/bigfloat.hpp"
#include "qbern/context.hpp"
#include "qbern/kind.hpp"
#include "qbern/rational.hpp"

namespace qbern {

enum class QTrigKind { sin_q, cos_q, Sin_q, Cos_q, S_q, C_q };

const char* to_string(QTrigKind kind);

// Approximate evaluations run at ctx.working_precision(). The *_enclosure
// variants also return a rigorous-in-spirit bound: series tail (ratio test on
// a monotonically decreasing term ratio) plus accumulated rounding.

Enclosure qexp_enclosure(const QContext& ctx, QExpFamily family, const BigFloat& z);
BigFloat eval_eq(const QContext& ctx, const BigFloat& z);
BigFloat eval_Eq(const QContext& ctx, const BigFloat& z);
BigFloat eval_expq(const QContext& ctx, const BigFloat& z);
/// E_q(z) = (-z(1-q); q)_∞ as a truncated product.
BigFloat eval_Eq_product(const QContext& ctx, const BigFloat& z);

Enclosure qtrig_enclosure(const QContext& ctx, QTrigKind kind, const BigFloat& z);
BigFloat eval_qtrig(const QContext& ctx, QTrigKind kind, const BigFloat& z);
/// d/dz of the q-trig function, termwise.
Enclosure qtrig_derivative_enclosure(const QContext& ctx, QTrigKind kind, const BigFloat& z);

/// 𝒥^{(k)}_α(z; q^s), s = base_exponent ∈ {1,2}; 𝒥(0) = 1.
Enclosure modified_bessel_enclosure(const QContext& ctx, Kind kind, int base_exponent, const BigFloat& z);
BigFloat eval_modified_bessel(const QContext& ctx, Kind kind, int base_exponent, const BigFloat& z);
/// d/dz 𝒥^{(k)}_α(z; q^s), termwise.
Enclosure modified_bessel_derivative_enclosure(const QContext& ctx, Kind kind, int base_exponent,
                                               const BigFloat& z);
/// J^{(k)}_α(z; q^s) including the infinite-product prefactor and the power of
/// z (or z/2). Needs z >= 0 unless α is an integer.
BigFloat eval_bessel(const QContext& ctx, Kind kind, int base_exponent, const BigFloat& z);

/// ₂φ₁(a, b; c; q, x) summed over m = 0..N (all m when an upper parameter
/// makes the series terminate earlier).
Rational phi21(const QContext& ctx, const Rational& a, const Rational& b, const Rational& c,
               const Rational& x, long n_terms);
/// ₃φ₂(a1, a2, a3; b1, b2; q, x). Without `n_terms` the series must terminate.
Rational phi32(const QContext& ctx, const Rational& a1, const Rational& a2, const Rational& a3,
               const Rational& b1, const Rational& b2, const Rational& x,
               std::optional<long> n_terms = std::nullopt);

/// Coefficients c_0..c_N of 1/exp_q(z) = Σ c_n z^n from the composition sum.
std::vector<Rational> recip_expq_coeffs(const QContext& ctx, long n_max);

}  // namespace qbern
