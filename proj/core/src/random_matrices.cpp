#include "qcomm/random_matrices.hpp"

#include <Eigen/QR>

#include <cmath>

namespace qcomm {

namespace {

// splitmix64 finalizer; good avalanche, cheap, stable across platforms.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a) {
  return mix64(seed ^ mix64(a));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(seed, a), b);
}

ComplexMatrix random_ginibre(Eigen::Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_ginibre: n must be positive");
  // Real and imaginary parts N(0, 1/2) so that E|entry|^2 = 1.
  std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
  ComplexMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      out(i, j) = Complex(re, im);
    }
  }
  return out;
}

ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_unitary: n must be positive");
  const ComplexMatrix g = random_ginibre(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix u = qr.householderQ();
  // Rotate each column so the implicit R has positive diagonal; without this
  // the QR sign ambiguity skews the distribution away from Haar.
  const ComplexVector diag = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(diag(j));
    const Complex phase = mag > 0.0 ? diag(j) / mag : Complex(1.0, 0.0);
    u.col(j) *= phase;
  }
  return u;
}

ComplexMatrix random_normal_matrix(Eigen::Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_normal_matrix: n must be positive");
  const ComplexMatrix u = random_unitary(n, rng);
  std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
  ComplexVector z(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z(i) = Complex(re, im);
  }
  return u * z.asDiagonal() * u.adjoint();
}

}  // namespace qcomm
