#pragma once

#include <cstddef>

#include "hca/gauss_linalg.hpp"
#include "hca/rng.hpp"

namespace hca {

// Random Gaussian-integer vector with entries in [-mag, mag] on both parts.
GaussVector random_gauss_vector(Rng& rng, std::size_t dim, long long mag = 3);
GaussVector random_nonzero_gauss_vector(Rng& rng, std::size_t dim, long long mag = 3);

// Random self-adjoint matrix with small entries (unconstrained spectrum).
GaussMatrix random_self_adjoint(Rng& rng, std::size_t dim, long long mag = 2);

// Self-adjoint with every Gershgorin disc inside [-2, 2]: row budgets of 2
// split between a diagonal entry and unit off-diagonal pairs. Admissible by
// construction.
GaussMatrix random_admissible_hamiltonian(Rng& rng, std::size_t dim);

// Admissible with max |l*eps| strictly below 2 - margin (spectral rejection,
// falling back to a small diagonal if rejection keeps failing).
GaussMatrix random_strictly_admissible_hamiltonian(Rng& rng, std::size_t dim,
                                                   double margin = 1e-3);

}  // namespace hca
