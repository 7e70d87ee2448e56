#pragma once

#include <cstddef>

#include "moyal/core/operator.hpp"
#include "moyal/core/theta.hpp"

namespace moyal::dynamics {

/// sum_h h(x_h, d_h) * + sum_{h<k} W(x_h, x_k) *  on n*m variables.
///
/// `h` is a single-particle star operator on m variables; `pair_potential`
/// is a polynomial on 2m variables (x, y). W must be translation invariant,
/// i.e. a function of x - y only; then it star-commutes with everything and
/// acts by ordinary multiplication. Throws std::invalid_argument otherwise.
core::StarOperator n_particle_h_star(const core::StarOperator& h, const core::PolyExpr& pair_potential,
                                     std::size_t particles);

/// True when sum_a (d/dx^a + d/dy^a) W = 0 for a polynomial on 2m variables.
bool is_translation_invariant(const core::PolyExpr& pair_potential);

}  // namespace moyal::dynamics
