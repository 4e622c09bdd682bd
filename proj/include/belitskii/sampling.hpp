#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "belitskii/system.hpp"

namespace belitskii {

using Rng = std::mt19937_64;

/// Deterministic per-item generator: the same (seed, index) always yields the
/// same stream, whatever the thread that consumes it.
Rng make_rng(std::uint64_t seed, std::uint64_t index);

/// Gaussian rationals the random spectra are drawn from.
const std::vector<Scalar>& eigenvalue_pool();

/// Dimension vector with min_total <= |d| <= max_total and n >= min_n.
DimensionVector random_dims(Rng& rng, size_t min_total, size_t max_total, size_t min_n = 1);

/// P J P^{-1} with J a random Jordan matrix over at most four pool values.
ExactMatrix random_split_matrix(Rng& rng, size_t n);

/// Unit lower times unit upper triangular with small entries, scaled by a
/// random nonzero diagonal.
ExactMatrix random_invertible(Rng& rng, size_t n);

/// Split-spectrum A and sparse small-integer B, C.
SystemTriple random_system(Rng& rng, DimensionVector d);

GroupElement random_group_element(Rng& rng, DimensionVector d);

} // namespace belitskii
