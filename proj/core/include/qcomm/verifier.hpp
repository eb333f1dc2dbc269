#pragma once

#include "qcomm/functionals.hpp"
#include "qcomm/random_matrices.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qcomm {

/// One entry (i, j, k, l) of the fourfold index range, 0-based.
using IndexQuadruple = std::array<int, 4>;

/// Partition of {0..n-1}^4 used by the summation identities:
///   d0: i = j = k = l                       (n entries, a subset of d4)
///   d1: (i, j, j, i), i != j                (n(n-1))
///   d2: (i, j, k, i), j != k                (n^2(n-1))
///   d3: (i, j, j, k), i != k                (n^2(n-1))
///   d4: complement of d1 u d2 u d3
/// d1, d2, d3 are pairwise disjoint; d0 never meets them.
struct IndexSets {
  std::vector<IndexQuadruple> d0, d1, d2, d3, d4;
};

IndexSets enumerate_index_sets(int n);

/// Outcome of one verifier check.  pass is true iff max_residual <= tolerance
/// (NaN residuals fail).  Residuals are relative to the natural scale of the
/// identity, so tolerances are dimensionless.
struct IdentityReport {
  std::string name;
  long trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// Both square-root sign identities behind QParams at one q:
///     |2 eps1 sqrt((c - q)(c - 1)) - (q + 1)|  and
///     |2 eps2 sqrt(c (c - q - 1)) - (1 - q)|.
/// The params overload lets callers feed perturbed constants (fault
/// injection); radicands are evaluated as given, so a wrong c fails loudly.
IdentityReport check_lemma1(double q);
IdentityReport check_lemma1(const QParams& p);

/// The squared-modulus expansion of the mixed chain terms: the sum over
/// i != k of |sqrt(c - q)(AB)_ik + eps1 sqrt(c - 1)(BA)_ik|^2 against its
/// expansion over the index sets d2, d3 and three quadruple sums.  Left side
/// and right side are both evaluated by direct entry loops.
IdentityReport check_lemma2(const ComplexMatrix& a, const ComplexMatrix& b, const QParams& p);

/// The master decomposition: c ||A||^2 ||B||^2 - f(A, B; q) equals a sum of
/// seven index-set groups whose leading term is a sum of squared moduli.
/// The left side goes through f_function (matrix products); the right side
/// through direct entry loops, so the two routes are independent.
IdentityReport check_decomposition(const ComplexMatrix& a, const ComplexMatrix& b, const QParams& p);

/// The three nonnegative groups whose sum is c ||A||^2 ||B||^2 - f at n = 2.
struct N2Groups {
  double offdiag = 0.0;    // sum over i != k of the lemma-2 squared moduli
  double adjugate = 0.0;   // c |<adj(B), A>|^2
  double diagonal = 0.0;   // |sqrt(c)(a11 b11 - a22 b22) + eps2 sqrt(c-1-q)(a12 b21 - a21 b12)|^2
  double sum() const { return offdiag + adjugate + diagonal; }
};

N2Groups n2_identity_groups(const ComplexMatrix& a, const ComplexMatrix& b, const QParams& p);

/// c ||A||^2 ||B||^2 - f(A, B; q) == sum of the three squared groups, 2x2 only.
IdentityReport check_n2_identity(const ComplexMatrix& a, const ComplexMatrix& b, const QParams& p);

/// For diagonal A = diag(a_1..a_n):
///   f(A, B; q) = sum_{i != j} |b_ji|^2 (|a_i|^2 + q |a_j|^2 - (1+q) Re(a_i conj(a_j)))
/// and the slack c ||A||^2 ||B||^2 - f dominates the chain sum
///   sum_{i != j} |b_ji|^2 |sqrt(c-1) a_i + eps1 sqrt(c-q) a_j|^2 >= 0,
/// which is the proof mechanism for normal A.
IdentityReport check_normal_reduction(const ComplexVector& a_diag, const ComplexMatrix& b,
                                      const QParams& p);

enum class Ensemble { kGinibre, kNormalA };

/// Draw `samples` pairs, track max of ratio(A, B, q) - c(q).  pass iff the
/// max excess stays within `slack` (positive excess beyond slack means a
/// counterexample candidate; the offending pair is serialized into note).
IdentityReport sample_bound(int n, double q, long samples, Rng& rng,
                            double slack = 1e-9, Ensemble ensemble = Ensemble::kGinibre);

struct VerifySuiteConfig {
  long trials = 1000;          // per identity check
  long bound_samples = 20000;  // per bound-sampling check
  std::uint64_t seed = 1;
  double c_bias = 0.0;         // fault injection: added to c before every identity check
  std::vector<std::string> only;  // substring filters on check names; empty = all
};

/// Run every check with derived seeds; deterministic for a fixed config.
/// With a nonzero c_bias the sign identities and decompositions must fail.
std::vector<IdentityReport> run_verify_suite(const VerifySuiteConfig& cfg);

}  // namespace qcomm
