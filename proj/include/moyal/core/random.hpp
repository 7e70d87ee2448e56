#pragma once

#include <cstddef>
#include <random>

#include "moyal/core/poly.hpp"
#include "moyal/core/theta.hpp"

namespace moyal::core {

/// Sparse polynomial with up to `max_terms` monomials of degree <= max_degree
/// and small Gaussian-rational coefficients.
PolyExpr random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms);

/// Antisymmetric matrix with small rational entries (some possibly zero).
ThetaMatrix random_theta(std::mt19937_64& rng, std::size_t dim);

}  // namespace moyal::core
