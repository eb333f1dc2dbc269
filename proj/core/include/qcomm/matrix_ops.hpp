#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace qcomm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Squared norms below this floor are treated as exactly zero wherever an
/// operand must be nonzero (normalized ratios, lifted-form construction).
inline constexpr double kDegenerateFloor = 1e-300;

/// Thrown when a dense eigensolve does not converge or leaves a residual
/// too large to trust.
class EigensolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_square(const ComplexMatrix& m, const char* where);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where);
void require_finite(const ComplexMatrix& m, const char* where);

/// Hilbert-Schmidt inner product tr(A* B), conjugate-linear in the first slot.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Squared Frobenius norm tr(A* A); always a real double.
double fro_norm_sq(const ComplexMatrix& a);

/// Commutator AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Deformed commutator AB - q BA; q = 1 recovers commutator().
ComplexMatrix q_commutator(const ComplexMatrix& a, const ComplexMatrix& b, double q);

/// Column-stacking vectorization: vec(A)(i + rows*j) = A(i, j).  With this
/// convention vec(X A Y) = (Y^T (x) X) vec(A), which fixes the orientation of
/// every Kronecker product in the lifted quadratic forms.
ComplexVector vec(const ComplexMatrix& a);

/// Inverse of vec() for square targets; v must have length n*n.
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index n);

/// Kronecker product X (x) Y in the same column-stacking convention.
ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);

/// A Hermitian matrix on the lifted n^2-dimensional space.  Construction
/// symmetrizes (M + M*)/2 so that entry (i,j) equals conj(entry (j,i))
/// exactly, which keeps the self-adjoint eigensolver on its fast, guaranteed
/// path.  Inputs must be finite.
class HermitianForm {
 public:
  explicit HermitianForm(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

struct EigPair {
  double value = 0.0;
  ComplexVector vector;  // unit 2-norm
};

/// Largest eigenvalue and a unit eigenvector of h, by full dense Hermitian
/// eigendecomposition.  Throws EigensolverError if the factorization fails or
/// the residual ||Hv - lambda v|| exceeds 1e-10 * ||H||_2.
EigPair top_eigpair(const HermitianForm& h);

}  // namespace qcomm
