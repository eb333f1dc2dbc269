#include "qcomm/functionals.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qcomm {

QParams bound_c(double q) {
  if (!std::isfinite(q)) throw std::invalid_argument("bound_c: q must be finite");
  QParams p;
  p.q = q;
  p.c = ((1.0 + q) + std::sqrt(2.0 * (1.0 + q * q))) / 2.0;
  p.eps1 = q >= -1.0 ? 1.0 : -1.0;
  p.eps2 = q <= 1.0 ? 1.0 : -1.0;
  return p;
}

double f_function(const ComplexMatrix& a, const ComplexMatrix& b, double q) {
  require_square(a, "f_function");
  require_same_dim(a, b, "f_function");
  if (!std::isfinite(q)) throw std::invalid_argument("f_function: q must be finite");
  const ComplexMatrix ba = b * a;
  const ComplexMatrix ab = a * b;
  return std::real(hs_inner(ba - ab, ba - q * ab));
}

double f_function_trace_form(const ComplexMatrix& a, const ComplexMatrix& b, double q) {
  require_square(a, "f_function_trace_form");
  require_same_dim(a, b, "f_function_trace_form");
  if (!std::isfinite(q)) throw std::invalid_argument("f_function_trace_form: q must be finite");
  const ComplexMatrix ah = a.adjoint();
  const ComplexMatrix bh = b.adjoint();
  const Complex t1 = (ah * bh * b * a).trace();
  const Complex t2 = (bh * ah * a * b).trace();
  const Complex t3 = (ah * bh * a * b).trace();
  const Complex t4 = (bh * ah * b * a).trace();
  return std::real(t1 + q * t2 - 0.5 * (1.0 + q) * (t3 + t4));
}

double r_function(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "r_function");
  require_same_dim(a, b, "r_function");
  const ComplexMatrix ba = b * a;
  const ComplexMatrix ab = a * b;
  const ComplexMatrix as = a.adjoint();
  const ComplexMatrix bas = b * as;
  const ComplexMatrix asb = as * b;
  const Complex sum = 0.5 * (hs_inner(ba - ab, ba) + hs_inner(bas - asb, bas));
  const double scale = fro_norm_sq(a) * fro_norm_sq(b);
  if (std::abs(sum.imag()) > 1e-12 * std::max(scale, kDegenerateFloor)) {
    throw std::runtime_error("r_function: imaginary defect " + std::to_string(sum.imag()) +
                             " exceeds 1e-12 of the operand scale");
  }
  return sum.real();
}

WitnessPair make_witness(double q, Eigen::Index n) {
  if (n < 2) throw std::invalid_argument("make_witness: n must be at least 2");
  const QParams p = bound_c(q);
  WitnessPair w;
  w.params = p;
  w.a = ComplexMatrix::Zero(n, n);
  w.b = ComplexMatrix::Zero(n, n);
  // Radicands are (q+1)^2-like quantities, nonnegative for every q; the
  // clamp only swallows rounding dust at the sign boundaries q = -1, +1.
  w.a(0, 0) = std::sqrt(std::max(p.c - 1.0, 0.0));
  w.a(1, 1) = -p.eps1 * std::sqrt(std::max(p.c - p.q, 0.0));
  w.b(0, 1) = Complex(1.0, 0.0);
  return w;
}

double ratio(const ComplexMatrix& a, const ComplexMatrix& b, double q) {
  require_square(a, "ratio");
  require_same_dim(a, b, "ratio");
  const double na = fro_norm_sq(a);
  const double nb = fro_norm_sq(b);
  if (!(na > kDegenerateFloor) || !(nb > kDegenerateFloor)) {
    throw std::invalid_argument("ratio: operand is numerically zero");
  }
  return f_function(a, b, q) / (na * nb);
}

}  // namespace qcomm
