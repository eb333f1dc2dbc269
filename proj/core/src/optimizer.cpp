#include "qcomm/optimizer.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace qcomm {

HermitianForm lift_form_in_A(const ComplexMatrix& b, double q) {
  require_square(b, "lift_form_in_A");
  require_finite(b, "lift_form_in_A");
  if (!(fro_norm_sq(b) > kDegenerateFloor)) {
    throw std::invalid_argument("lift_form_in_A: B is numerically zero");
  }
  const Eigen::Index n = b.rows();
  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  const ComplexMatrix cross = kron(b.transpose(), b.adjoint());
  ComplexMatrix h = kron(eye, b.adjoint() * b) + q * kron(b.conjugate() * b.transpose(), eye) -
                    0.5 * (1.0 + q) * (cross + cross.adjoint());
  return HermitianForm(std::move(h));
}

HermitianForm lift_form_in_B(const ComplexMatrix& a, double q) {
  require_square(a, "lift_form_in_B");
  require_finite(a, "lift_form_in_B");
  if (!(fro_norm_sq(a) > kDegenerateFloor)) {
    throw std::invalid_argument("lift_form_in_B: A is numerically zero");
  }
  const Eigen::Index n = a.rows();
  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  const ComplexMatrix cross = kron(a.conjugate(), a);
  ComplexMatrix k = kron(a.conjugate() * a.transpose(), eye) + q * kron(eye, a.adjoint() * a) -
                    0.5 * (1.0 + q) * (cross + cross.adjoint());
  return HermitianForm(std::move(k));
}

namespace {

ComplexMatrix unit_unvec(const ComplexVector& v, Eigen::Index n) {
  ComplexMatrix m = unvec(v, n);
  // The eigenvector is unit up to rounding; renormalize so the Rayleigh
  // quotient and the raw objective stay the same number.
  m /= std::sqrt(fro_norm_sq(m));
  return m;
}

struct RestartOutcome {
  double value = -std::numeric_limits<double>::infinity();
  ComplexMatrix a, b;
  long iterations = 0;
  bool converged = false;
  bool aborted = false;
  std::vector<double> trace;
};

RestartOutcome run_restart(ComplexMatrix a, ComplexMatrix b, bool have_start_value,
                           const OptimizeConfig& cfg) {
  RestartOutcome out;
  double prev = 0.0;
  bool have_prev = false;
  if (have_start_value) {
    prev = f_function(a, b, cfg.q);
    have_prev = true;
    if (cfg.keep_trace) out.trace.push_back(prev);
    out.value = prev;
    out.a = a;
    out.b = b;
  }
  try {
    for (int it = 0; it < cfg.max_iters; ++it) {
      a = unit_unvec(top_eigpair(lift_form_in_A(b, cfg.q)).vector, cfg.n);
      b = unit_unvec(top_eigpair(lift_form_in_B(a, cfg.q)).vector, cfg.n);
      const double cur = f_function(a, b, cfg.q);
      ++out.iterations;
      if (cfg.keep_trace) out.trace.push_back(cur);
      out.value = cur;
      out.a = a;
      out.b = b;
      if (have_prev && std::abs(cur - prev) <= cfg.tol * std::max(1.0, std::abs(cur))) {
        out.converged = true;
        break;
      }
      prev = cur;
      have_prev = true;
    }
  } catch (const EigensolverError&) {
    out.aborted = true;
  }
  return out;
}

}  // namespace

OptimizeResult optimize_cell(const OptimizeConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("optimize_cell: n must be at least 2");
  if (cfg.restarts < 1) throw std::invalid_argument("optimize_cell: restarts must be positive");
  if (cfg.max_iters < 1) throw std::invalid_argument("optimize_cell: max_iters must be positive");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("optimize_cell: tol must be positive");
  if (!std::isfinite(cfg.q)) throw std::invalid_argument("optimize_cell: q must be finite");

  OptimizeResult result;
  result.best_ratio = -std::numeric_limits<double>::infinity();
  bool any_value = false;

  for (int r = 0; r < cfg.restarts; ++r) {
    ComplexMatrix a, b;
    bool have_start_value = false;
    if (r == 0) {
      // Witness-seeded restart: start at the known extremal pair, normalized.
      const WitnessPair w = make_witness(cfg.q, cfg.n);
      a = w.a / std::sqrt(fro_norm_sq(w.a));
      b = w.b / std::sqrt(fro_norm_sq(w.b));
      have_start_value = true;
    } else {
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
      b = random_ginibre(cfg.n, rng);
      b /= std::sqrt(fro_norm_sq(b));
      a = ComplexMatrix::Zero(cfg.n, cfg.n);  // replaced by the first half-step
    }
    RestartOutcome ro = run_restart(std::move(a), std::move(b), have_start_value, cfg);
    result.iterations += ro.iterations;
    if (ro.aborted) {
      ++result.restarts_aborted;
      if (!std::isfinite(ro.value)) continue;  // aborted before producing any value
    } else {
      ++result.restarts_completed;
    }
    if (!any_value || ro.value > result.best_ratio) {
      any_value = true;
      result.best_ratio = ro.value;
      result.a_opt = std::move(ro.a);
      result.b_opt = std::move(ro.b);
      result.converged = ro.converged;
      if (cfg.keep_trace) result.trace = std::move(ro.trace);
    }
  }
  if (!any_value) {
    throw EigensolverError("optimize_cell: every restart aborted before producing a value");
  }
  return result;
}

}  // namespace qcomm
