#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "moyal/hopf/modes.hpp"

namespace moyal::hopf {

/// Two-particle deformed (anti)symmetric state built from plane waves i, j,
/// expanded over the argument-ordered products phi_h(x1) phi_k(x2) of the
/// noncommuting coordinates (flat index h * M + k). Three independent
/// constructions are returned:
///  - with_r:          e_ij + sign * R^{kh}_{ij} e_hk, using r_matrix
///  - swapped:         phi_i(x1) phi_j(x2) + sign * phi_i(x2) phi_j(x1), with
///                     the second product reordered by the coordinate
///                     commutation phase
///  - weyl:            the Weyl image of F^{-1} applied to the commutative
///                     (anti)symmetrized pair
struct DeformedPair {
    Eigen::VectorXcd with_r;
    Eigen::VectorXcd swapped;
    Eigen::VectorXcd weyl;

    /// Largest entrywise difference among the three constructions.
    double mismatch() const;
};

DeformedPair deformed_basis(std::size_t i, std::size_t j, const ModeBasis& modes, const core::ThetaMatrix& theta,
                            int sign);

struct SlaterState {
    /// Coefficients over phi_{j1}(x1) ... phi_{jn}(xn), flat row-major index.
    Eigen::VectorXcd coefficients;
    /// True when a repeated index made the determinant vanish.
    bool vanished = false;
};

/// (1/sqrt(n!)) sum_tau sign(tau) phi_{i1}(x_{tau(1)}) ... phi_{in}(x_{tau(n)}),
/// keeping the order of the wavefunctions and permuting the coordinates.
SlaterState slater_hat(const std::vector<std::size_t>& indices, const ModeBasis& modes, const core::ThetaMatrix& theta);

}  // namespace moyal::hopf
