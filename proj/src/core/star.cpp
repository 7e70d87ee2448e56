#include "moyal/core/star.hpp"

#include <cmath>
#include <stdexcept>

#include "bidiff.hpp"

namespace moyal::core {

namespace {

void check_dims(const PolyExpr& a, const PolyExpr& b, const ThetaMatrix& theta) {
    if (a.nvars() != b.nvars() || a.nvars() != theta.dim())
        throw std::invalid_argument("moyal_star: dimension mismatch between operands and theta");
}

}  // namespace

PolyExpr moyal_star(const PolyExpr& a, const PolyExpr& b, const ThetaMatrix& theta) {
    check_dims(a, b, theta);
    detail::BiTerms bi;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) detail::add_to(bi, {ea, eb}, ca * cb);
    bi = detail::apply_twist(std::move(bi), theta, detail::RightLeg::Differentiate);
    PolyExpr out(a.nvars());
    for (const auto& [key, v] : bi) {
        Exponents e = key.first;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += key.second[i];
        out.add_term(e, v);
    }
    return out;
}

PolyExpr star_commutator(const PolyExpr& a, const PolyExpr& b, const ThetaMatrix& theta) {
    return moyal_star(a, b, theta) - moyal_star(b, a, theta);
}

Rational exponential_star_angle(std::span<const Rational> h, std::span<const Rational> k, const ThetaMatrix& theta) {
    return Rational(-theta.form(h, k) / 2);
}

PolyExpr star_monomial(std::span<const std::size_t> sequence, std::size_t nvars, const ThetaMatrix& theta) {
    PolyExpr acc = PolyExpr::constant(nvars, Scalar(1));
    for (std::size_t h : sequence) acc = moyal_star(acc, PolyExpr::variable(nvars, h), theta);
    return acc;
}

StarPolyCoeffs weyl_normal_form(const PolyExpr& f, const ThetaMatrix& theta) {
    if (f.nvars() != theta.dim()) throw std::invalid_argument("weyl_normal_form: dimension mismatch");
    StarPolyCoeffs out{f.nvars(), {}};
    PolyExpr rest = f;
    while (!rest.is_zero()) {
        // eliminate one term of top degree; the star-monomial with the same
        // sorted index sequence agrees with it up to lower-degree terms
        const unsigned top = rest.degree();
        auto it = rest.terms().begin();
        while (total_degree(it->first) != top) ++it;
        const Exponents e = it->first;
        const Scalar c = it->second;
        std::vector<std::size_t> seq;
        for (std::size_t v = 0; v < e.size(); ++v)
            for (unsigned j = 0; j < e[v]; ++j) seq.push_back(v);
        auto [slot, inserted] = out.terms.try_emplace(seq, c);
        if (!inserted) {
            slot->second += c;
            if (slot->second.is_zero()) out.terms.erase(slot);
        }
        rest -= star_monomial(seq, f.nvars(), theta) * c;
    }
    return out;
}

PolyExpr inverse_weyl(const StarPolyCoeffs& coeffs, const ThetaMatrix& theta) {
    if (coeffs.nvars != theta.dim()) throw std::invalid_argument("inverse_weyl: dimension mismatch");
    PolyExpr out(coeffs.nvars);
    for (const auto& [seq, c] : coeffs.terms) out += star_monomial(seq, coeffs.nvars, theta) * c;
    return out;
}

PolyGaussian PolyGaussian::derivative(std::size_t var) const {
    PolyExpr x = PolyExpr::variable(poly.nvars(), var);
    return {poly.derivative(var) - x * poly * Scalar(Rational(2 * alpha)), alpha};
}

std::complex<double> PolyGaussian::evaluate(std::span<const double> point) const {
    double r2 = 0;
    for (double v : point) r2 += v * v;
    return poly.evaluate(point) * std::exp(-alpha.get_d() * r2);
}

namespace {

// Direct bidifferential sum over index tuples; the derivative order on the
// polynomial leg bounds the series.
template <typename Left, typename Right, typename Combine>
auto bidifferential_sum(const Left& left, const Right& right, unsigned order, const ThetaMatrix& theta,
                        Combine combine) {
    struct Pair {
        Left l;
        Right r;
        Scalar weight;
    };
    std::vector<Pair> level{{left, right, Scalar(1)}};
    auto acc = combine(left, right);
    const Scalar half_i(Rational(0), Rational(1, 2));
    for (unsigned k = 1; k <= order; ++k) {
        std::vector<Pair> next;
        for (const auto& pr : level)
            for (std::size_t h = 0; h < theta.dim(); ++h)
                for (std::size_t q = 0; q < theta.dim(); ++q) {
                    if (sgn(theta(h, q)) == 0) continue;
                    next.push_back({pr.l.derivative(h), pr.r.derivative(q), pr.weight * Scalar(theta(h, q))});
                }
        Scalar factor = pow(half_i, k);
        for (unsigned j = 2; j <= k; ++j) factor /= Scalar(static_cast<long>(j));
        for (const auto& pr : next) {
            auto term = combine(pr.l, pr.r);
            term.poly *= pr.weight * factor;
            acc.poly += term.poly;
        }
        level = std::move(next);
    }
    return acc;
}

}  // namespace

PolyGaussian star_poly_left(const PolyExpr& p, const PolyGaussian& f, const ThetaMatrix& theta) {
    if (p.nvars() != f.poly.nvars() || p.nvars() != theta.dim())
        throw std::invalid_argument("star_poly_left: dimension mismatch");
    return bidifferential_sum(p, f, p.degree(), theta,
                              [](const PolyExpr& l, const PolyGaussian& r) { return PolyGaussian{l * r.poly, r.alpha}; });
}

PolyGaussian star_poly_right(const PolyGaussian& f, const PolyExpr& p, const ThetaMatrix& theta) {
    if (p.nvars() != f.poly.nvars() || p.nvars() != theta.dim())
        throw std::invalid_argument("star_poly_right: dimension mismatch");
    return bidifferential_sum(f, p, p.degree(), theta,
                              [](const PolyGaussian& l, const PolyExpr& r) { return PolyGaussian{l.poly * r, l.alpha}; });
}

}  // namespace moyal::core
