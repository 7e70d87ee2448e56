#include "moyal/fock/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moyal::fock {

using core::Rational;

void FieldElement::add(FieldTerm t) {
    if (t.wave.size() != m_ * points_ || t.op_momentum.size() != m_)
        throw std::invalid_argument("field term has the wrong shape");
    terms_.push_back(std::move(t));
}

hopf::Momentum FieldElement::charge(const FieldTerm& t) const {
    hopf::Momentum out = t.op_momentum;
    for (std::size_t point = 0; point < points_; ++point)
        for (std::size_t a = 0; a < m_; ++a) out[a] += t.wave[point * m_ + a];
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (o.m_ != m_ || o.points_ != points_) throw std::invalid_argument("field elements have different shapes");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

FieldElement& FieldElement::operator*=(std::complex<double> c) {
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

FockMatrix FieldElement::evaluate(const std::vector<double>& coords) const {
    if (coords.size() != m_ * points_) throw std::invalid_argument("evaluate: wrong number of coordinates");
    if (terms_.empty()) throw std::invalid_argument("evaluate: empty field element has no Fock dimension");
    FockMatrix out(terms_.front().op.rows(), terms_.front().op.cols());
    for (const auto& t : terms_) {
        double angle = 0;
        for (std::size_t j = 0; j < coords.size(); ++j) angle += t.wave[j].get_d() * coords[j];
        out += (t.coeff * std::polar(1.0, angle)) * t.op;
    }
    return out;
}

namespace {

FieldElement combine(const FieldElement& a, const FieldElement& b, const core::ThetaMatrix* theta) {
    if (a.dim() != b.dim() || a.points() != b.points())
        throw std::invalid_argument("field elements have different shapes");
    FieldElement out(a.dim(), a.points());
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            FieldTerm r{s.coeff * t.coeff, s.wave, s.op * t.op, hopf::add(s.op_momentum, t.op_momentum)};
            for (std::size_t j = 0; j < r.wave.size(); ++j) r.wave[j] += t.wave[j];
            if (theta) r.coeff *= std::polar(1.0, Rational(-hopf::form(a.charge(s), *theta, b.charge(t)) / 2).get_d());
            out.add(std::move(r));
        }
    return out;
}

std::vector<Rational> wave_at(const hopf::Momentum& p, Rational sign, std::size_t point, std::size_t points) {
    std::vector<Rational> out(p.size() * points, Rational(0));
    for (std::size_t a = 0; a < p.size(); ++a) out[point * p.size() + a] = sign * p[a];
    return out;
}

hopf::Momentum negate(hopf::Momentum p) {
    for (auto& c : p) c = -c;
    return p;
}

}  // namespace

FieldElement product(const FieldElement& a, const FieldElement& b) { return combine(a, b, nullptr); }

FieldElement star(const FieldElement& a, const FieldElement& b, const core::ThetaMatrix& theta) {
    if (theta.dim() != a.dim()) throw std::invalid_argument("star: theta dimension does not match");
    return combine(a, b, &theta);
}

FieldElement field(const hopf::ModeBasis& modes, const Ladder& ladder, std::size_t point, std::size_t points) {
    FieldElement out(modes.dim(), points);
    for (std::size_t p = 0; p < modes.size(); ++p)
        out.add({1.0, wave_at(modes[p], Rational(1), point, points), ladder.annihilate[p], negate(modes[p])});
    return out;
}

FieldElement field_conjugate(const hopf::ModeBasis& modes, const Ladder& ladder, std::size_t point,
                             std::size_t points) {
    FieldElement out(modes.dim(), points);
    for (std::size_t p = 0; p < modes.size(); ++p)
        out.add({1.0, wave_at(modes[p], Rational(-1), point, points), ladder.create[p], modes[p]});
    return out;
}

FieldElement operator_element(const FockMatrix& op, const hopf::Momentum& charge, std::size_t points) {
    FieldElement out(charge.size(), points);
    out.add({1.0, std::vector<Rational>(charge.size() * points, Rational(0)), op, charge});
    return out;
}

FieldElement plane_wave(std::vector<Rational> wave, std::size_t m, const FockBasis& basis) {
    if (m == 0 || wave.size() % m != 0) throw std::invalid_argument("plane_wave: wave length not a multiple of m");
    FieldElement out(m, wave.size() / m);
    out.add({1.0, std::move(wave), identity(basis), hopf::Momentum(m, Rational(0))});
    return out;
}

double FieldReport::max() const {
    return std::max({field_exchange, conjugate_exchange, delta_limit, invariance, number_operator});
}

FieldReport field_star_algebra(const hopf::ModeBasis& modes, Statistics statistics, unsigned nmax,
                               const std::vector<std::vector<double>>& samples, const core::ThetaMatrix& theta) {
    if (theta.dim() != modes.dim()) throw std::invalid_argument("field_star_algebra: theta dimension mismatch");
    const std::size_t m = modes.dim();
    const FockBasis basis(statistics, modes.size(), nmax);
    const Ladder ladder = build_ccr(basis);
    const std::complex<double> sign = double(exchange_sign(statistics));
    const core::ThetaMatrix zero(m);

    const FieldElement phi_x = field(modes, ladder, 0, 2);
    const FieldElement phi_y = field(modes, ladder, 1, 2);
    const FieldElement phis_y = field_conjugate(modes, ladder, 1, 2);

    const FieldElement exchange = star(phi_x, phi_y, theta) - star(phi_y, phi_x, theta) * sign;
    const FieldElement conj_exchange = star(phi_x, phis_y, theta) - star(phis_y, phi_x, theta) * sign;

    // phi_i(x) * phi_i*(y), the c-number right-hand side.
    FieldElement rhs(m, 2), rhs_classical(m, 2);
    for (std::size_t p = 0; p < modes.size(); ++p) {
        const FieldElement left = plane_wave(wave_at(modes[p], Rational(1), 0, 2), m, basis);
        const FieldElement right = plane_wave(wave_at(modes[p], Rational(-1), 1, 2), m, basis);
        rhs += star(left, right, theta);
        rhs_classical += star(left, right, zero);
    }
    const FieldElement conj_residual = conj_exchange - rhs;

    // Spanning set: single ladder operators and their bilinears.
    std::vector<FieldElement> omegas;
    for (std::size_t q = 0; q < modes.size(); ++q) {
        omegas.push_back(operator_element(ladder.create[q], modes[q], 2));
        omegas.push_back(operator_element(ladder.annihilate[q], negate(modes[q]), 2));
        for (std::size_t r = 0; r < modes.size(); ++r)
            omegas.push_back(operator_element(ladder.create[q] * ladder.annihilate[r],
                                              hopf::add(modes[q], negate(modes[r])), 2));
    }

    FieldReport out;
    FieldElement number(m, 2);
    for (std::size_t p = 0; p < modes.size(); ++p)
        number += star(operator_element(ladder.create[p], modes[p], 2),
                       operator_element(ladder.annihilate[p], negate(modes[p]), 2), theta);
    const std::vector<double> origin(2 * m, 0.0);
    out.number_operator = interior_residual(number.evaluate(origin) - number_operator(basis), basis);

    for (const auto& x : samples)
        for (const auto& y : samples) {
            if (x.size() != m || y.size() != m) throw std::invalid_argument("field_star_algebra: sample dimension");
            std::vector<double> xy(x);
            xy.insert(xy.end(), y.begin(), y.end());
            out.field_exchange = std::max(out.field_exchange, interior_residual(exchange.evaluate(xy), basis));
            out.conjugate_exchange =
                std::max(out.conjugate_exchange, interior_residual(conj_residual.evaluate(xy), basis));

            std::complex<double> delta = 0;
            for (std::size_t p = 0; p < modes.size(); ++p) {
                double angle = 0;
                for (std::size_t a = 0; a < m; ++a) angle += modes[p][a].get_d() * (x[a] - y[a]);
                delta += std::polar(1.0, angle);
            }
            out.delta_limit = std::max(
                out.delta_limit, interior_residual(rhs_classical.evaluate(xy) - delta * identity(basis), basis));

            for (const auto& w : omegas) {
                const FieldElement d1 = star(phi_x, w, theta) - product(phi_x, w);
                const FieldElement d2 = star(w, phi_x, theta) - product(w, phi_x);
                out.invariance = std::max({out.invariance, interior_residual(d1.evaluate(xy), basis),
                                           interior_residual(d2.evaluate(xy), basis)});
            }
        }
    return out;
}

}  // namespace moyal::fock
