#pragma once

#include <vector>

#include "qbern/context.hpp"
#include "qbern/detrep.hpp"
#include "qbern/kind.hpp"
#include "qbern/poly.hpp"

namespace qbern {

/// Jackson q-derivative: z^n -> [n]_q z^{n-1}.
PolyZ dq(const QContext& ctx, const PolyZ& p);
/// Jackson derivative with base 1/q: z^n -> q^{1-n}[n]_q z^{n-1}.
PolyZ dq_inverse_base(const QContext& ctx, const PolyZ& p);
/// Symmetric q-derivative: z^n -> q^{(1-n)/2}[n]_q z^{n-1}.
PolyZ delta_q(const QContext& ctx, const PolyZ& p);

struct AppellEntry {
  Kind kind;
  long n;
  bool pass;
};

/// D B_n = [n]_q B_{n-1} for 1 <= n <= n_max, with D = dq, dq_inverse_base or
/// delta_q for the first, second and third kind.
std::vector<AppellEntry> appell_check(const QContext& ctx, Kind kind, long n_max, Exec exec = Exec::parallel);

}  // namespace qbern
