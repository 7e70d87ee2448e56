#include "moyal/hopf/deformed_basis.hpp"

#include <cmath>
#include <stdexcept>

#include "moyal/core/star.hpp"
#include "moyal/hopf/representation.hpp"

namespace moyal::hopf {

using core::Rational;

namespace {

void check_modes(const std::vector<std::size_t>& indices, const ModeBasis& modes, const core::ThetaMatrix& theta) {
    if (modes.dim() != theta.dim()) throw std::invalid_argument("mode dimension does not match theta");
    for (std::size_t i : indices)
        if (i >= modes.size()) throw std::out_of_range("mode index out of range");
}

// Momentum p placed on particle `particle` of `particles`, as a vector on
// the particle-major coordinate list.
std::vector<Rational> on_particle(const Momentum& p, std::size_t particle, std::size_t particles) {
    std::vector<Rational> out(p.size() * particles, Rational(0));
    for (std::size_t a = 0; a < p.size(); ++a) out[particle * p.size() + a] = p[a];
    return out;
}

std::complex<double> phase(const Rational& angle) { return std::polar(1.0, angle.get_d()); }

}  // namespace

double DeformedPair::mismatch() const {
    return std::max((with_r - swapped).cwiseAbs().maxCoeff(), (with_r - weyl).cwiseAbs().maxCoeff());
}

DeformedPair deformed_basis(std::size_t i, std::size_t j, const ModeBasis& modes, const core::ThetaMatrix& theta,
                            int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("deformed_basis: sign must be +1 or -1");
    check_modes({i, j}, modes, theta);
    const std::size_t M = modes.size();
    const auto at = [M](std::size_t h, std::size_t k) { return static_cast<Eigen::Index>(h * M + k); };
    const double s = sign;
    const auto zero = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(M * M));
    DeformedPair out{zero, zero, zero};

    const PhaseTensor r = r_matrix(modes, theta);
    out.with_r[at(i, j)] += 1.0;
    out.with_r[at(j, i)] += s * r.phase({i, j});

    // phi_i(x2) phi_j(x1) = exp([A, B]) phi_j(x1) phi_i(x2) with
    // A = i p_i.x2, B = i p_j.x1 and [x2^mu, x1^nu] = i Theta^{(2mu),(1nu)}.
    const core::ThetaMatrix big = core::multiparticle_theta(theta, 2);
    const Rational commutator_im = -big.form(on_particle(modes[i], 1, 2), on_particle(modes[j], 0, 2));
    out.swapped[at(i, j)] += 1.0;
    out.swapped[at(j, i)] += s * phase(commutator_im);

    // Weyl image of a commutative product: the star product of plane waves
    // on distinct particles differs from the symmetric image by the
    // exponential star phase.
    const auto weyl_of = [&](std::size_t h, std::size_t k) {
        return phase(-core::exponential_star_angle(on_particle(modes[h], 0, 2), on_particle(modes[k], 1, 2), big));
    };
    const std::complex<double> fbar = f_matrix(modes, 2, theta).inverse().phase({i, j});
    out.weyl[at(i, j)] += fbar * weyl_of(i, j);
    out.weyl[at(j, i)] += s * fbar * weyl_of(j, i);
    return out;
}

SlaterState slater_hat(const std::vector<std::size_t>& indices, const ModeBasis& modes, const core::ThetaMatrix& theta) {
    if (indices.empty()) throw std::invalid_argument("slater_hat: need at least one wavefunction");
    check_modes(indices, modes, theta);
    const std::size_t n = indices.size();
    const PhaseTensor shape(modes.size(), n);
    SlaterState out{Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(shape.size())), false};

    // A product of plane waves exp(i u_s . x_{a_s}) in a given order equals the
    // symmetric exponential times prod_{s<t} exp(-(i/2) u_s theta u_t).
    const auto order_angle = [&](const std::vector<std::size_t>& mode_in_order) {
        Rational angle(0);
        for (std::size_t s = 0; s < mode_in_order.size(); ++s)
            for (std::size_t t = s + 1; t < mode_in_order.size(); ++t)
                angle -= theta.form(modes[mode_in_order[s]], modes[mode_in_order[t]]) / 2;
        return angle;
    };

    double norm = 1;
    for (std::size_t k = 2; k <= n; ++k) norm *= double(k);
    norm = 1.0 / std::sqrt(norm);

    for (const auto& tau : all_permutations(n)) {
        std::vector<std::size_t> by_argument(n);
        for (std::size_t k = 0; k < n; ++k) by_argument[tau[k]] = indices[k];
        const Rational angle = order_angle(indices) - order_angle(by_argument);
        out.coefficients[static_cast<Eigen::Index>(shape.flat_index(by_argument))] +=
            double(permutation_sign(tau)) * norm * phase(angle);
    }
    if (out.coefficients.cwiseAbs().maxCoeff() < 1e-12) {
        out.coefficients.setZero();
        out.vanished = true;
    }
    return out;
}

}  // namespace moyal::hopf
