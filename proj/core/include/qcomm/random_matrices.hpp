#pragma once

#include "qcomm/matrix_ops.hpp"

#include <cstdint>
#include <random>

namespace qcomm {

using Rng = std::mt19937_64;

/// Deterministic stream splitting.  Any run that derives the same labels gets
/// the same child seed no matter which thread asks first, which is what makes
/// parallel and serial schedules produce identical records.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// n x n matrix of i.i.d. standard complex Gaussians (E|entry|^2 = 1),
/// filled in column-major order.
ComplexMatrix random_ginibre(Eigen::Index n, Rng& rng);

/// Haar-distributed unitary via QR of a Ginibre sample with the phase fix
/// that makes the factorization unique (R diagonal rotated positive).
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng);

/// Random normal (commuting with its adjoint) matrix: U diag(z) U* with
/// Haar U and standard complex Gaussian diagonal z.
ComplexMatrix random_normal_matrix(Eigen::Index n, Rng& rng);

}  // namespace qcomm
