#pragma once

#include <random>

#include "emtoro/state.hpp"

namespace emtoro {

using Rng = std::mt19937_64;

/// Band-limited random real field: independent Gaussian coefficients on the
/// modes with |k_j| <= kmax, mirrored for exact Hermitian symmetry.
ScalarField random_scalar(const GridPtr& grid, int kmax, Rng& rng);
VectorField3 random_vector(const GridPtr& grid, int kmax, Rng& rng);
VectorField3 random_divfree(const GridPtr& grid, int kmax, Rng& rng);

/// All fourteen components random and band-limited.
State14 random_state(const GridPtr& grid, int kmax, Rng& rng,
                     Basis basis = Basis::symmetrized);

/// Rescale so the H^1 norm of the pair becomes 1 (used by the prepared
/// random data recipe).
void normalize_h1_pair(VectorField3& a, VectorField3& b);

}  // namespace emtoro
