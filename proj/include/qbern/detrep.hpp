#pragma once

#include <vector>

#include "qbern/context.hpp"
#include "qbern/kind.hpp"
#include "qbern/parallel.hpp"
#include "qbern/poly.hpp"
#include "qbern/rational.hpp"

namespace qbern {

using ExactMatrix = std::vector<std::vector<Rational>>;

/// μ^{(k)}_m, the Taylor coefficients (in t^m/[m]_q!) of g^{(k)}_α(it;q) divided
/// by the q-exponential of -t/2.
Rational mu(const QContext& ctx, Kind kind, long m);
std::vector<Rational> mu_table(const QContext& ctx, Kind kind, long m_max);

/// The (n+1)×(n+1) matrix with a symbolic first row w_j z^j and scalar rows
/// a_{ij} = [j choose i-1]_q μ_{j-i+1}, i = 1..n, j = 0..n.
struct DeterminantLayout {
  Kind kind;
  long n;
  std::vector<Rational> weights;  // w_0..w_n
  ExactMatrix rows;               // n rows of n+1 entries
};

DeterminantLayout build_matrix(const QContext& ctx, Kind kind, long n);

/// Exact determinant (fraction-free elimination after clearing row denominators).
Rational determinant(const ExactMatrix& m);

/// det of the scalar block with column j removed, j = 0..n.
std::vector<Rational> column_minors(const DeterminantLayout& layout, Exec exec = Exec::parallel);

/// B^{(k)}_{n,α}(z;q) by cofactor expansion along the symbolic row.
PolyZ bernoulli_poly_det(const QContext& ctx, Kind kind, long n, Exec exec = Exec::parallel);
/// B_0..B_N; the parallel path distributes over n.
std::vector<PolyZ> bernoulli_poly_det_table(const QContext& ctx, Kind kind, long n_max,
                                            Exec exec = Exec::parallel);

/// β^{(k)}_{n,α}(q) = (-1)^n det[a_{ij}]_{1<=i,j<=n}.
Rational bernoulli_number(const QContext& ctx, Kind kind, long n);

}  // namespace qbern
