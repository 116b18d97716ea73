#pragma once

// Seeded random inputs for property checks.

#include <random>

#include "ybs/spinspace.hpp"

namespace ybs {

using Rng = std::mt19937_64;

// Random polynomial in t1..tN of total degree <= max_degree with small
// integer coefficients; about `terms` terms.
MultiPoly random_poly(const VarSetPtr& vs, int N, int max_degree, int terms, Rng& rng);
// Random vector in V_N[t] supported on about `support` basis words.
TensorVector random_vector(int N, Rng& rng, int support = 4, int max_degree = 2);

}  // namespace ybs
