#include "moyal/dynamics/many_body.hpp"

#include <stdexcept>
#include <vector>

namespace moyal::dynamics {

using core::PolyExpr;
using core::StarOperator;

bool is_translation_invariant(const PolyExpr& pair_potential) {
    const std::size_t two_m = pair_potential.nvars();
    if (two_m % 2 != 0) return false;
    const std::size_t m = two_m / 2;
    for (std::size_t a = 0; a < m; ++a)
        if (!(pair_potential.derivative(a) + pair_potential.derivative(m + a)).is_zero()) return false;
    return true;
}

StarOperator n_particle_h_star(const StarOperator& h, const PolyExpr& pair_potential, std::size_t particles) {
    if (particles < 1) throw std::invalid_argument("n_particle_h_star: need at least one particle");
    const std::size_t m = h.nvars();
    if (pair_potential.nvars() != 2 * m)
        throw std::invalid_argument("n_particle_h_star: pair potential must act on two particle coordinates");
    if (!is_translation_invariant(pair_potential))
        throw std::invalid_argument("n_particle_h_star: pair potential is not a function of coordinate differences");

    const std::size_t n = particles * m;
    // Coefficients of particle h depend on x_h only, and the multiparticle
    // theta restricted to one particle is theta itself, so the star form
    // embeds directly.
    StarOperator out(n);
    for (std::size_t i = 0; i < particles; ++i) out += h.embed(i * m, n);
    if (pair_potential.is_zero()) return out;
    for (std::size_t i = 0; i < particles; ++i)
        for (std::size_t j = i + 1; j < particles; ++j) {
            std::vector<PolyExpr> images;
            for (std::size_t a = 0; a < m; ++a) images.push_back(PolyExpr::variable(n, i * m + a));
            for (std::size_t a = 0; a < m; ++a) images.push_back(PolyExpr::variable(n, j * m + a));
            out += StarOperator::multiplication(pair_potential.substitute(images));
        }
    return out;
}

}  // namespace moyal::dynamics
