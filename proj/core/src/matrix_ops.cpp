#include "qcomm/matrix_ops.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>
#include <utility>

namespace qcomm {

void require_square(const ComplexMatrix& m, const char* where) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(where) + ": matrix must be square, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

void require_finite(const ComplexMatrix& m, const char* where) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(where) + ": matrix has non-finite entries");
  }
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "hs_inner");
  // tr(A* B) = sum_ij conj(a_ij) b_ij -- O(n^2), no product needed.
  return a.conjugate().cwiseProduct(b).sum();
}

double fro_norm_sq(const ComplexMatrix& a) { return a.squaredNorm(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator");
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix q_commutator(const ComplexMatrix& a, const ComplexMatrix& b, double q) {
  require_square(a, "q_commutator");
  require_same_dim(a, b, "q_commutator");
  return a * b - q * (b * a);
}

ComplexVector vec(const ComplexMatrix& a) {
  return Eigen::Map<const ComplexVector>(a.data(), a.size());
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index n) {
  if (n < 1 || v.size() != n * n) {
    throw std::invalid_argument("unvec: vector length " + std::to_string(v.size()) +
                                " does not match dimension " + std::to_string(n));
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

HermitianForm::HermitianForm(ComplexMatrix m) {
  require_square(m, "HermitianForm");
  require_finite(m, "HermitianForm");
  // (x + y)/2 == (y + x)/2 in IEEE arithmetic, so the symmetrized matrix is
  // Hermitian exactly, not just up to rounding.
  m_ = 0.5 * (m + m.adjoint()).eval();
}

EigPair top_eigpair(const HermitianForm& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw EigensolverError("top_eigpair: dense Hermitian eigensolve did not converge (dim " +
                           std::to_string(h.dim()) + ")");
  }
  const Eigen::Index last = h.dim() - 1;
  EigPair out{solver.eigenvalues()(last), solver.eigenvectors().col(last)};
  // Eigenvalues come out ascending, so the spectral norm is the larger of the
  // two extremes in magnitude.
  const double spec_norm =
      std::max(std::abs(solver.eigenvalues()(0)), std::abs(solver.eigenvalues()(last)));
  const double residual = (h.matrix() * out.vector - out.value * out.vector).norm();
  if (residual > 1e-10 * spec_norm + kDegenerateFloor) {
    throw EigensolverError("top_eigpair: residual " + std::to_string(residual) +
                           " exceeds 1e-10 * ||H||_2 = " + std::to_string(1e-10 * spec_norm));
  }
  return out;
}

}  // namespace qcomm
