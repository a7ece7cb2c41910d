#pragma once

// Seeded generators for property checks. Deterministic for a given engine
// state on a given platform.

#include <cstddef>
#include <random>

#include "eur/matrix.hpp"

namespace eur::random {

using Engine = std::mt19937_64;

Matrix ginibre(std::size_t rows, std::size_t cols, Engine& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
Matrix unitary(std::size_t d, Engine& rng);

/// Random isometry C^in -> C^out (first `in` columns of a Haar unitary).
Matrix isometry(std::size_t in, std::size_t out, Engine& rng);

Matrix hermitian(std::size_t d, Engine& rng);

/// Hilbert-Schmidt random state (rank = dim) or a random pure state when
/// rank == 1. `rank == 0` means full rank.
DensityMatrix density_matrix(const Dims& dims, Engine& rng, std::size_t rank = 0);

double uniform(double lo, double hi, Engine& rng);

}  // namespace eur::random
