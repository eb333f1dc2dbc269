#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcomm/functionals.hpp"
#include "qcomm/random_matrices.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace qcomm;

TEST_CASE("bound_c closed-form special values") {
  CHECK(std::abs(bound_c(1.0).c - 2.0) <= 1e-15);
  CHECK(std::abs(bound_c(0.0).c - (1.0 + std::sqrt(2.0)) / 2.0) <= 1e-15);
  CHECK(std::abs(bound_c(-1.0).c - 1.0) <= 1e-15);
}

TEST_CASE("bound_c sign constants flip at the boundaries") {
  CHECK(bound_c(-1.0).eps1 == 1.0);
  CHECK(bound_c(-1.0 - 1e-9).eps1 == -1.0);
  CHECK(bound_c(-5.0).eps1 == -1.0);
  CHECK(bound_c(1.0).eps2 == 1.0);
  CHECK(bound_c(1.0 + 1e-9).eps2 == -1.0);
  CHECK(bound_c(5.0).eps2 == -1.0);
  CHECK_THROWS_AS(bound_c(std::nan("")), std::invalid_argument);
}

TEST_CASE("bound_c satisfies its quadratic relation and lower bounds") {
  Rng rng(3);
  std::uniform_real_distribution<double> uq(-6.0, 6.0);
  for (int s = 0; s < 200; ++s) {
    const double q = uq(rng);
    const QParams p = bound_c(q);
    // 2c^2 = 2c(1+q) + (q-1)^2/2, the defining quadratic.
    const double lhs = 2.0 * p.c * p.c;
    const double rhs = 2.0 * p.c * (1.0 + q) + (q - 1.0) * (q - 1.0) / 2.0;
    CHECK(test::rel_err(lhs, rhs) < 1e-14);
    CHECK(p.c >= 1.0 - 1e-15);
    CHECK(p.c >= q - 1e-15);
    CHECK(p.c >= 1.0 + q - 1e-15);
  }
}

TEST_CASE("f_function frozen 2x2 value") {
  // A = diag(1, -1), B = e12: BA = -e12, AB = e12, [B, A] = -2 e12, so
  // f(A, B; 1) = ||[B, A]||^2 = 4.
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = Complex(1, 0);
  a(1, 1) = Complex(-1, 0);
  ComplexMatrix b = ComplexMatrix::Zero(2, 2);
  b(0, 1) = Complex(1, 0);
  CHECK(f_function(a, b, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
  // General q on the same pair: ||BA||^2 + q ||AB||^2 - (1+q) Re tr(A*B*AB)
  // = 1 + q - (1+q)(-1) = 2(1 + q).
  CHECK(f_function(a, b, 0.5) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(f_function(a, b, -1.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("f_function special q values match their closed forms") {
  Rng rng(5);
  for (const Eigen::Index n : {2, 3, 5}) {
    for (int s = 0; s < 25; ++s) {
      const ComplexMatrix a = random_ginibre(n, rng);
      const ComplexMatrix b = random_ginibre(n, rng);
      CHECK(test::rel_err(f_function(a, b, 1.0), fro_norm_sq(commutator(a, b))) < 1e-12);
      CHECK(test::rel_err(f_function(a, b, -1.0), fro_norm_sq(b * a) - fro_norm_sq(a * b)) <
            1e-12);
    }
  }
}

TEST_CASE("f_function agrees with the trace form") {
  Rng rng(6);
  std::uniform_real_distribution<double> uq(-3.0, 3.0);
  for (const Eigen::Index n : {2, 3, 4, 5}) {
    for (int s = 0; s < 10; ++s) {
      const ComplexMatrix a = random_ginibre(n, rng);
      const ComplexMatrix b = random_ginibre(n, rng);
      const double q = uq(rng);
      CHECK(test::rel_err(f_function(a, b, q), f_function_trace_form(a, b, q)) < 1e-12);
    }
  }
}

TEST_CASE("f_function validates input") {
  const ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  CHECK_THROWS_AS(f_function(a, ComplexMatrix::Zero(3, 3), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(f_function(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(f_function(a, a, std::nan("")), std::invalid_argument);
}

TEST_CASE("r_function matches its f-representation and the normal-B form") {
  Rng rng(7);
  for (const Eigen::Index n : {2, 3, 5}) {
    for (int s = 0; s < 25; ++s) {
      const ComplexMatrix a = random_ginibre(n, rng);
      const ComplexMatrix b = random_ginibre(n, rng);
      const double via_f = 0.5 * (f_function(a, b, 0.0) + f_function(a.adjoint(), b, 0.0));
      CHECK(test::rel_err(r_function(a, b), via_f) < 1e-12);
      const ComplexMatrix bn = random_normal_matrix(n, rng);
      CHECK(test::rel_err(r_function(a, bn), 0.5 * fro_norm_sq(commutator(a, bn))) < 1e-12);
    }
  }
}

TEST_CASE("make_witness attains the bound") {
  SUBCASE("q = 0 frozen values") {
    const WitnessPair w = make_witness(0.0, 2);
    // ||A||^2 = 2c - 1 - q = sqrt(2).
    CHECK(fro_norm_sq(w.a) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(fro_norm_sq(w.b) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f_function(w.a, w.b, 0.0) ==
          doctest::Approx(w.params.c * std::sqrt(2.0)).epsilon(1e-13));
  }
  SUBCASE("boundary q = -1 degenerates one diagonal entry, not the pair") {
    const WitnessPair w = make_witness(-1.0, 2);
    CHECK(std::abs(w.a(0, 0)) == 0.0);  // c - 1 = 0 exactly
    CHECK(std::abs(w.a(1, 1) - Complex(-std::sqrt(2.0), 0)) < 1e-15);
    CHECK(ratio(w.a, w.b, -1.0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("random q, both embeddings") {
    Rng rng(8);
    std::uniform_real_distribution<double> uq(-4.0, 4.0);
    for (int s = 0; s < 50; ++s) {
      const double q = uq(rng);
      for (const Eigen::Index n : {2, 5}) {
        const WitnessPair w = make_witness(q, n);
        CHECK(std::abs(ratio(w.a, w.b, q) - w.params.c) <=
              1e-12 * std::max(1.0, w.params.c));
        // ||A||^2 = sqrt(2 (1 + q^2)) stays strictly positive.
        CHECK(fro_norm_sq(w.a) ==
              doctest::Approx(std::sqrt(2.0 * (1.0 + q * q))).epsilon(1e-12));
      }
    }
  }
  SUBCASE("embedding pads with zeros") {
    const WitnessPair w = make_witness(0.5, 4);
    CHECK(std::abs(w.a(2, 2)) == 0.0);
    CHECK(std::abs(w.a(3, 3)) == 0.0);
    CHECK(std::abs(w.b(2, 3)) == 0.0);
  }
  CHECK_THROWS_AS(make_witness(1.0, 1), std::invalid_argument);
}

TEST_CASE("ratio is scale invariant and rejects degenerate operands") {
  Rng rng(9);
  const ComplexMatrix a = random_ginibre(3, rng);
  const ComplexMatrix b = random_ginibre(3, rng);
  const double base = ratio(a, b, 0.7);
  CHECK(test::rel_err(base, ratio(2.0 * a, -3.0 * b, 0.7)) < 1e-12);
  CHECK_THROWS_AS(ratio(ComplexMatrix::Zero(3, 3), b, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(ratio(a, ComplexMatrix::Zero(3, 3), 0.7), std::invalid_argument);
}
