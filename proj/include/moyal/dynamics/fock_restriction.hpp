#pragma once

#include <cstddef>

#include "moyal/core/theta.hpp"
#include "moyal/fock/basis.hpp"
#include "moyal/hopf/modes.hpp"

namespace moyal::dynamics {

/// Residuals for the free Hamiltonian h = scale * sigma(P^2) on a mode set.
struct RestrictionReport {
    unsigned particles = 0;
    /// |H_Fock restricted to the n-sector - K^dagger H^(n) K|, K the
    /// (anti)symmetrized tensor embedding.
    double undeformed = 0;
    /// Same with dressed ladder operators and the twisted embedding F^n K.
    double twisted = 0;
    /// |H_Fock on the n-sector - diag(sum_p n_p eps_p)|.
    double additivity = 0;

    double max() const;
};

/// Compares sum_p eps_p a^+_p a^p, eps_p = scale |p|^2, on the n-particle
/// sector against the direct n-particle operator sum_h eps(p_h) on
/// modes^{(x) n}. Throws std::invalid_argument for n == 0 or n > nmax.
RestrictionReport fock_restriction_check(const hopf::ModeBasis& modes, fock::Statistics statistics, unsigned n,
                                         unsigned nmax, const core::ThetaMatrix& theta,
                                         const core::Rational& scale = core::Rational(1));

}  // namespace moyal::dynamics
