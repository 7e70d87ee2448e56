#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "moyal/core/operator.hpp"
#include "moyal/core/theta.hpp"

namespace moyal::dynamics {

using core::DiffOperator;
using core::PolyExpr;
using core::Rational;
using core::StarOperator;
using core::ThetaMatrix;

/// Raised when 1 + b*theta/2 = 0: the deformed kinetic term degenerates.
class SingularDeformation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Charged particle in a uniform field on the Moyal plane, symmetric gauge.
/// theta^{ab} = theta * eps^{ab}; scale stands for hbar^2/2m.
struct LandauParams {
    Rational b;
    Rational theta;
    Rational scale{1};

    /// 1 + b*theta/2.
    Rational deformation_factor() const { return Rational(1 + b * theta / 2); }
    /// Throws SingularDeformation when deformation_factor() == 0.
    void validate() const;
};

/// Operator pair in both representations plus their difference.
/// `difference` is the zero operator when the identity holds.
struct HamiltonianReport {
    StarOperator built;
    StarOperator closed_form;
    StarOperator difference;

    bool holds() const { return difference.is_zero(); }
};

/// Covariant derivatives D_a = d_a + i b eps^{ab} x^b of particle `particle`
/// among `particles`, as star operators (coefficients act by left star
/// multiplication). Variables are ordered particle-major.
std::array<StarOperator, 2> landau_connection(const LandauParams& p, std::size_t particle = 0,
                                              std::size_t particles = 1);

/// l = -i eps^{ab} x^a d_b on the given particle.
DiffOperator angular_momentum(std::size_t particle = 0, std::size_t particles = 1);
/// Flat Laplacian on the given particle.
DiffOperator laplacian(std::size_t particle = 0, std::size_t particles = 1);

/// -scale * D_a * D_a as a star operator on one particle.
StarOperator landau_h_star_built(const LandauParams& p);
/// scale [-(1+b theta/2)^2 Laplacian + b^2 x^2 - 2b(1+b theta/2) l] in
/// ordinary form, on the given particle.
DiffOperator landau_closed_form(const LandauParams& p, std::size_t particle = 0, std::size_t particles = 1);

HamiltonianReport landau_h_star(const LandauParams& p);

/// scale*b*theta [i b eps^{ab}(x1^a d_{2b} + x2^a d_{1b}) - (2 + b theta) d_{1a} d_{2a}]
/// in ordinary form on two particles.
DiffOperator two_particle_cross_term(const LandauParams& p);

/// -scale (b theta/2)^2 (Laplacian_1 + Laplacian_2): the part of the exact
/// two-particle operator not accounted for by two_particle_cross_term.
DiffOperator two_particle_second_order_term(const LandauParams& p);

/// Assembled two-particle operator (multiparticle theta, W = 0) against
/// h(x1) + h(x2) + two_particle_cross_term.
HamiltonianReport two_particle_h_star(const LandauParams& p);

/// Same assembly, compared against the closed form including
/// two_particle_second_order_term.
HamiltonianReport two_particle_h_star_complete(const LandauParams& p);

/// The full additivity-breaking operator, in ordinary form:
/// H^(2) - h(x1) - h(x2).
DiffOperator two_particle_nonadditive_part(const LandauParams& p);

}  // namespace moyal::dynamics
