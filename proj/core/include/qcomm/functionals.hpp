#pragma once

#include "qcomm/matrix_ops.hpp"

namespace qcomm {

/// The deformation parameter together with the constants attached to it.
///
/// c is the sharp constant
///
///     c(q) = ((1 + q) + sqrt(2 (1 + q^2))) / 2,
///
/// and eps1, eps2 are the signs fixed by the two square-root identities
///
///     2 eps1 sqrt((c - q)(c - 1)) = q + 1      (eps1 = +1 iff q >= -1)
///     2 eps2 sqrt(c (c - q - 1))  = 1 - q      (eps2 = +1 iff q <= 1)
///
/// so eps1 flips exactly at q = -1 and eps2 at q = +1.  At those boundary
/// points the corresponding radicand vanishes and either sign works.
struct QParams {
  double q = 0.0;
  double c = 0.0;
  double eps1 = 1.0;
  double eps2 = 1.0;
};

/// Evaluate c(q) and its sign constants.  q must be finite.
QParams bound_c(double q);

/// The deformed commutator functional
///
///     f(A, B; q) = Re <[B, A], [B, A]_q>
///                = ||BA||^2 + q ||AB||^2 - (1 + q) Re tr(A* B* A B),
///
/// with [B, A] = BA - AB, [B, A]_q = BA - q AB.  At q = 1 this is
/// ||[A, B]||^2; at q = -1, ||BA||^2 - ||AB||^2.  Evaluated through matrix
/// products and hs_inner (the inner-product route); see
/// f_function_trace_form for the independent trace route.
double f_function(const ComplexMatrix& a, const ComplexMatrix& b, double q);

/// Same functional evaluated as
///
///     tr(A*B*BA) + q tr(B*A*AB) - (1+q)/2 (tr(A*B*AB) + tr(B*A*BA)),
///
/// term by term.  Kept as a cross-check route; agreement with f_function is
/// one of the verifier's standing checks.
double f_function_trace_form(const ComplexMatrix& a, const ComplexMatrix& b, double q);

/// r(A, B) = 1/2 (<[B, A], BA> + <[B, A*], BA*>).  The complex sum is real
/// up to rounding; the imaginary part must stay below 1e-12 * ||A||^2 ||B||^2
/// (anything larger throws) and is discarded.  Equals
/// (f(A,B;0) + f(A*,B;0)) / 2, and 1/2 ||[A,B]||^2 when B is normal.
double r_function(const ComplexMatrix& a, const ComplexMatrix& b);

/// Extremal pair attaining f(A, B; q) = c(q) ||A||^2 ||B||^2.
struct WitnessPair {
  ComplexMatrix a;
  ComplexMatrix b;
  QParams params;
};

/// The saturating pair, embedded in the top-left 2x2 block of an n x n zero
/// matrix (n >= 2):
///
///     A = diag(sqrt(c - 1), -eps1 sqrt(c - q)),   B = e_{12}.
///
/// ||A||^2 = 2c - 1 - q = sqrt(2 (1 + q^2)) > 0 for every q, so the pair is
/// never degenerate, including at the sign boundaries q = -1 and q = +1
/// where one diagonal entry of A vanishes.
WitnessPair make_witness(double q, Eigen::Index n);

/// Normalized objective f(A, B; q) / (||A||^2 ||B||^2).  Both squared norms
/// must exceed kDegenerateFloor.
double ratio(const ComplexMatrix& a, const ComplexMatrix& b, double q);

}  // namespace qcomm
