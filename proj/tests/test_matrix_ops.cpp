#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcomm/matrix_ops.hpp"
#include "qcomm/random_matrices.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace qcomm;

namespace {

ComplexMatrix e_matrix(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(i, j) = Complex(1.0, 0.0);
  return m;
}

}  // namespace

TEST_CASE("hs_inner is tr(A* B) and conjugate-linear in the first slot") {
  Rng rng(11);
  const ComplexMatrix a = random_ginibre(3, rng);
  const ComplexMatrix b = random_ginibre(3, rng);
  const Complex direct = (a.adjoint() * b).trace();
  CHECK(std::abs(hs_inner(a, b) - direct) < 1e-13);

  const Complex lambda(0.5, -2.0);
  const Complex lhs = hs_inner(lambda * a, b);
  const Complex rhs = std::conj(lambda) * hs_inner(a, b);
  CHECK(std::abs(lhs - rhs) < 1e-12);

  CHECK(std::abs(hs_inner(a, a).imag()) < 1e-13);
  CHECK(hs_inner(a, a).real() == doctest::Approx(fro_norm_sq(a)).epsilon(1e-13));
}

TEST_CASE("hs_inner rejects mismatched dimensions") {
  const ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  const ComplexMatrix b = ComplexMatrix::Zero(3, 3);
  CHECK_THROWS_AS(hs_inner(a, b), std::invalid_argument);
}

TEST_CASE("fro_norm_sq sums squared moduli") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = Complex(1.0, 0.0);
  m(1, 0) = Complex(0.0, 2.0);
  CHECK(fro_norm_sq(m) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("commutator of the 2x2 shift pair is diag(1, -1)") {
  const ComplexMatrix e12 = e_matrix(2, 0, 1);
  const ComplexMatrix e21 = e_matrix(2, 1, 0);
  const ComplexMatrix c = commutator(e12, e21);
  CHECK(std::abs(c(0, 0) - Complex(1, 0)) == 0.0);
  CHECK(std::abs(c(1, 1) - Complex(-1, 0)) == 0.0);
  CHECK(std::abs(c(0, 1)) == 0.0);
  CHECK(std::abs(c(1, 0)) == 0.0);
}

TEST_CASE("q_commutator interpolates between product and commutator") {
  Rng rng(12);
  const ComplexMatrix a = random_ginibre(3, rng);
  const ComplexMatrix b = random_ginibre(3, rng);
  CHECK((q_commutator(a, b, 1.0) - commutator(a, b)).norm() == 0.0);
  CHECK((q_commutator(a, b, 0.0) - a * b).norm() == 0.0);
  const ComplexMatrix half = q_commutator(a, b, 0.5);
  CHECK((half - (a * b - 0.5 * (b * a))).norm() < 1e-14);
  CHECK_THROWS_AS(q_commutator(a, ComplexMatrix::Zero(2, 2), 1.0), std::invalid_argument);
}

TEST_CASE("vec stacks columns and unvec inverts it") {
  ComplexMatrix m(2, 2);
  m << Complex(1, 0), Complex(3, 0), Complex(2, 0), Complex(4, 0);
  const ComplexVector v = vec(m);
  // Column-major: (1,0) then (2,0) from column 0, then column 1.
  CHECK(v(0) == Complex(1, 0));
  CHECK(v(1) == Complex(2, 0));
  CHECK(v(2) == Complex(3, 0));
  CHECK(v(3) == Complex(4, 0));
  CHECK(test::matrices_equal(unvec(v, 2), m));

  Rng rng(13);
  const ComplexMatrix r = random_ginibre(4, rng);
  CHECK(test::matrices_equal(unvec(vec(r), 4), r));

  CHECK_THROWS_AS(unvec(v, 3), std::invalid_argument);
  CHECK_THROWS_AS(unvec(v, 0), std::invalid_argument);
}

TEST_CASE("kron matches the vec identity vec(X A Y) = (Y^T kron X) vec(A)") {
  Rng rng(14);
  for (const Eigen::Index n : {2, 3}) {
    const ComplexMatrix x = random_ginibre(n, rng);
    const ComplexMatrix y = random_ginibre(n, rng);
    const ComplexMatrix a = random_ginibre(n, rng);
    const ComplexVector lhs = vec(x * a * y);
    const ComplexVector rhs = kron(y.transpose(), x) * vec(a);
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("kron has block structure and the right dimensions") {
  ComplexMatrix x(2, 2);
  x << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(2, 0);
  ComplexMatrix y(3, 3);
  y.setIdentity();
  const ComplexMatrix k = kron(x, y);
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
  CHECK(k(0, 0) == Complex(1, 0));
  CHECK(k(5, 5) == Complex(2, 0));
  CHECK(k(0, 3) == Complex(0, 0));
}

TEST_CASE("HermitianForm symmetrizes exactly") {
  Rng rng(15);
  const ComplexMatrix g = random_ginibre(4, rng);
  const HermitianForm h(g);
  const ComplexMatrix& m = h.matrix();
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      CHECK(m(i, j) == std::conj(m(j, i)));
    }
  }
  // Hermitian input is preserved up to the symmetrization arithmetic.
  const ComplexMatrix herm = g + g.adjoint();
  CHECK((HermitianForm(herm).matrix() - herm).norm() < 1e-14);
}

TEST_CASE("HermitianForm rejects non-square and non-finite input") {
  CHECK_THROWS_AS(HermitianForm(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(HermitianForm{bad}, std::invalid_argument);
}

TEST_CASE("top_eigpair finds the largest eigenvalue of a known diagonal") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = Complex(1, 0);
  d(1, 1) = Complex(5, 0);
  d(2, 2) = Complex(3, 0);
  const EigPair top = top_eigpair(HermitianForm(d));
  CHECK(top.value == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(std::abs(top.vector(1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(top.vector.norm() - 1.0) < 1e-12);
}

TEST_CASE("top_eigpair dominates random Rayleigh quotients") {
  Rng rng(16);
  const ComplexMatrix g = random_ginibre(6, rng);
  const HermitianForm h(g);
  const EigPair top = top_eigpair(h);
  CHECK(std::abs(top.vector.norm() - 1.0) < 1e-12);
  CHECK((h.matrix() * top.vector - top.value * top.vector).norm() < 1e-10 * (1.0 + std::abs(top.value)));
  for (int s = 0; s < 50; ++s) {
    ComplexVector v = vec(random_ginibre(6, rng)).head(6);
    v.normalize();
    const double rayleigh = (v.adjoint() * h.matrix() * v)(0).real();
    CHECK(rayleigh <= top.value + 1e-10);
  }
}
