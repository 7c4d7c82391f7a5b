#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "tetrig/tetra.hpp"

namespace tetrig {

struct GenOptions {
  FieldSpec spec;
  long long coord_bound = 10;  // numerators drawn from [-coord_bound, coord_bound]
  long long denom_bound = 10;  // denominators from [1, denom_bound]; rationals only
  int retry_cap = 64;
};

using Rng = std::mt19937_64;

// Trial t under seed s always uses an engine seeded with s + t, so every
// draw is reproducible and trials are independent of evaluation order.
Rng rng_for_trial(std::uint64_t seed, std::uint64_t trial);

Scalar random_scalar(Rng&, const GenOptions&);
Scalar random_nonzero_scalar(Rng&, const GenOptions&);
std::array<Scalar, 6> random_sextuple(Rng&, const GenOptions&);

// A random instance with nonzero form determinant, nonzero quadrume and
// all four face quadreas nonzero, so every invariant and theorem applies.
// Degenerate draws are resampled up to retry_cap, then the trial is
// abandoned (nullopt) for the caller to count.
std::optional<Tetrahedron> random_instance(Rng&, const GenOptions&);

// Same acceptance conditions but with the positive definite form
// I + G G^T for a random matrix G, which keeps the form well conditioned
// for the floating-point oracle. Rationals only.
std::optional<Tetrahedron> random_positive_definite_instance(Rng&, const GenOptions&);

}  // namespace tetrig
