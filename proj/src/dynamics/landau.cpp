#include "moyal/dynamics/landau.hpp"

#include "moyal/dynamics/many_body.hpp"

namespace moyal::dynamics {

using core::Exponents;
using core::Scalar;

namespace {

std::size_t coord(std::size_t particle, std::size_t a) { return 2 * particle + a; }

PolyExpr x(std::size_t particle, std::size_t a, std::size_t particles) {
    return PolyExpr::variable(2 * particles, coord(particle, a));
}

DiffOperator d(std::size_t particle, std::size_t a, std::size_t particles) {
    return DiffOperator::derivative(2 * particles, coord(particle, a));
}

DiffOperator mul(const PolyExpr& p) { return DiffOperator::multiplication(p); }

Scalar real(const Rational& r) { return Scalar(r); }
Scalar imag(const Rational& r) { return Scalar(Rational(0), r); }

ThetaMatrix theta_for(const LandauParams& p, std::size_t particles) {
    return core::multiparticle_theta(ThetaMatrix::planar(p.theta), particles);
}

}  // namespace

void LandauParams::validate() const {
    if (sgn(deformation_factor()) == 0) throw SingularDeformation("singular deformation: 1 + b*theta/2 = 0");
}

std::array<StarOperator, 2> landau_connection(const LandauParams& p, std::size_t particle, std::size_t particles) {
    if (particle >= particles) throw std::out_of_range("particle index out of range");
    const std::size_t n = 2 * particles;
    // eps^{12} = 1: D_1 = d_1 + i b x^2, D_2 = d_2 - i b x^1
    return {StarOperator::derivative(n, coord(particle, 0)) +
                StarOperator::multiplication(x(particle, 1, particles) * imag(p.b)),
            StarOperator::derivative(n, coord(particle, 1)) -
                StarOperator::multiplication(x(particle, 0, particles) * imag(p.b))};
}

DiffOperator angular_momentum(std::size_t particle, std::size_t particles) {
    // i (x^2 d_1 - x^1 d_2)
    return (core::compose(mul(x(particle, 1, particles)), d(particle, 0, particles)) -
            core::compose(mul(x(particle, 0, particles)), d(particle, 1, particles))) *
           Scalar::i();
}

DiffOperator laplacian(std::size_t particle, std::size_t particles) {
    Exponents e1(2 * particles, 0), e2(2 * particles, 0);
    e1[coord(particle, 0)] = 2;
    e2[coord(particle, 1)] = 2;
    return DiffOperator::derivative(e1) + DiffOperator::derivative(e2);
}

StarOperator landau_h_star_built(const LandauParams& p) {
    p.validate();
    const ThetaMatrix theta = ThetaMatrix::planar(p.theta);
    const auto D = landau_connection(p);
    return (core::op_compose(D[0], D[0], theta) + core::op_compose(D[1], D[1], theta)) * real(Rational(-p.scale));
}

DiffOperator landau_closed_form(const LandauParams& p, std::size_t particle, std::size_t particles) {
    p.validate();
    const Rational k = p.deformation_factor();
    const PolyExpr r2 = x(particle, 0, particles) * x(particle, 0, particles) +
                        x(particle, 1, particles) * x(particle, 1, particles);
    DiffOperator h = laplacian(particle, particles) * real(Rational(-k * k)) + mul(r2 * real(Rational(p.b * p.b))) -
                     angular_momentum(particle, particles) * real(Rational(2 * p.b * k));
    return h * real(p.scale);
}

HamiltonianReport landau_h_star(const LandauParams& p) {
    const ThetaMatrix theta = ThetaMatrix::planar(p.theta);
    HamiltonianReport r{landau_h_star_built(p), core::from_ordinary(landau_closed_form(p), theta), StarOperator(2)};
    r.difference = r.built - r.closed_form;
    return r;
}

DiffOperator two_particle_cross_term(const LandauParams& p) {
    p.validate();
    // i b eps^{ab} (x1^a d_{2b} + x2^a d_{1b})
    auto mixed = [&](std::size_t i, std::size_t j) {
        return core::compose(mul(x(i, 0, 2)), d(j, 1, 2)) - core::compose(mul(x(i, 1, 2)), d(j, 0, 2));
    };
    DiffOperator first = (mixed(0, 1) + mixed(1, 0)) * imag(p.b);
    DiffOperator second =
        (core::compose(d(0, 0, 2), d(1, 0, 2)) + core::compose(d(0, 1, 2), d(1, 1, 2))) * real(Rational(2 + p.b * p.theta));
    return (first - second) * real(Rational(p.scale * p.b * p.theta));
}

DiffOperator two_particle_second_order_term(const LandauParams& p) {
    p.validate();
    const Rational half_bt = p.b * p.theta / 2;
    return (laplacian(0, 2) + laplacian(1, 2)) * real(Rational(-p.scale * half_bt * half_bt));
}

namespace {

StarOperator two_particle_built(const LandauParams& p) {
    return n_particle_h_star(landau_h_star_built(p), PolyExpr(4), 2);
}

HamiltonianReport compare_two_particle(const LandauParams& p, const DiffOperator& closed) {
    const ThetaMatrix theta = theta_for(p, 2);
    HamiltonianReport r{two_particle_built(p), core::from_ordinary(closed, theta), StarOperator(4)};
    r.difference = r.built - r.closed_form;
    return r;
}

}  // namespace

HamiltonianReport two_particle_h_star(const LandauParams& p) {
    return compare_two_particle(p, landau_closed_form(p, 0, 2) + landau_closed_form(p, 1, 2) + two_particle_cross_term(p));
}

HamiltonianReport two_particle_h_star_complete(const LandauParams& p) {
    return compare_two_particle(p, landau_closed_form(p, 0, 2) + landau_closed_form(p, 1, 2) +
                                       two_particle_cross_term(p) + two_particle_second_order_term(p));
}

DiffOperator two_particle_nonadditive_part(const LandauParams& p) {
    const DiffOperator single = core::to_ordinary(landau_h_star_built(p), ThetaMatrix::planar(p.theta));
    return core::to_ordinary(two_particle_built(p), theta_for(p, 2)) - single.embed(0, 4) - single.embed(2, 4);
}

}  // namespace moyal::dynamics
