#pragma once

#include "qcomm/functionals.hpp"
#include "qcomm/random_matrices.hpp"

#include <cstdint>
#include <vector>

namespace qcomm {

/// For fixed B, f(A, B; q) = vec(A)* H vec(A) with
///
///     H = I (x) B*B + q (conj(B) B^T) (x) I
///         - (1+q)/2 (B^T (x) B* + conj(B) (x) B),
///
/// in the column-stacking convention of vec().  B must be square, finite and
/// numerically nonzero.
HermitianForm lift_form_in_A(const ComplexMatrix& b, double q);

/// For fixed A, f(A, B; q) = vec(B)* K vec(B) with
///
///     K = (conj(A) A^T) (x) I + q I (x) A*A
///         - (1+q)/2 (conj(A) (x) A + A^T (x) A*).
HermitianForm lift_form_in_B(const ComplexMatrix& a, double q);

struct OptimizeConfig {
  Eigen::Index n = 2;
  double q = 1.0;
  int restarts = 16;     // restart 0 is witness-seeded, the rest random
  int max_iters = 500;   // alternating sweeps per restart
  double tol = 1e-10;    // stall when |f_k - f_{k-1}| <= tol * max(1, |f_k|)
  std::uint64_t seed = 0;
  bool keep_trace = false;  // record the best restart's per-sweep values
};

struct OptimizeResult {
  double best_ratio = 0.0;  // best f over unit-norm iterates = estimate of sup f / (||A||^2 ||B||^2)
  ComplexMatrix a_opt;      // unit Frobenius norm
  ComplexMatrix b_opt;
  long iterations = 0;       // total alternating sweeps across all restarts
  int restarts_completed = 0;
  int restarts_aborted = 0;  // eigensolver failures; abort the restart, not the cell
  bool converged = false;    // stall criterion met on the best restart
  std::vector<double> trace; // filled only when keep_trace is set; non-decreasing
};

/// Alternating spectral ascent on the Rayleigh quotient: with both iterates
/// held at unit Frobenius norm, each half-step replaces one matrix by the top
/// eigenvector of the quadratic form in which the objective is exact, so the
/// objective never decreases.  Deterministic for a fixed config, independent
/// of scheduling: every random restart draws from its own derived seed.
OptimizeResult optimize_cell(const OptimizeConfig& cfg);

}  // namespace qcomm
