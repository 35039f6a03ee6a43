#pragma once

#include <random>

#include "gframe/spaces.hpp"

// Seeded random objects for property suites and tests.

namespace gframe::rnd {

std::mt19937_64 make_rng(std::uint64_t seed);

CVec random_state(std::size_t dim, std::mt19937_64& rng);  // unit norm
Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Matrix random_hermitian(std::size_t n, std::mt19937_64& rng);
Matrix random_unitary(std::size_t n, std::mt19937_64& rng);
Matrix random_density(std::size_t n, std::mt19937_64& rng);

/// Random unitary element of the invariant algebra, expressed in the
/// relational basis: a random unitary on the trivial-character block plus
/// random phases on the remaining diagonal.
Matrix random_invariant_unitary(const KinSpace& space, std::mt19937_64& rng);

}  // namespace gframe::rnd
