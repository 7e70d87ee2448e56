#include "moyal/core/operator.hpp"

#include "bidiff.hpp"
#include "moyal/core/star.hpp"

namespace moyal::core {

namespace {

void require_dims(std::size_t a, std::size_t b, const ThetaMatrix& theta) {
    if (a != b || a != theta.dim()) throw std::invalid_argument("operator dimension mismatch with theta");
}

// Calls f(gamma, binom(alpha, gamma)) for every gamma <= alpha.
template <typename F>
void for_each_sub_index(const Exponents& alpha, F f) {
    Exponents gamma(alpha.size(), 0);
    while (true) {
        Rational binom = 1;
        for (std::size_t v = 0; v < alpha.size(); ++v)
            for (unsigned j = 0; j < gamma[v]; ++j) binom = binom * (alpha[v] - j) / (j + 1);
        f(gamma, Scalar(binom));
        std::size_t v = 0;
        while (v < alpha.size() && gamma[v] == alpha[v]) gamma[v++] = 0;
        if (v == alpha.size()) return;
        ++gamma[v];
    }
}

Exponents plus(const Exponents& a, const Exponents& b) {
    Exponents out(a);
    for (std::size_t v = 0; v < a.size(); ++v) out[v] += b[v];
    return out;
}

Exponents minus(const Exponents& a, const Exponents& b) {
    Exponents out(a);
    for (std::size_t v = 0; v < a.size(); ++v) out[v] -= b[v];
    return out;
}

// sum_gamma binom(alpha, gamma) (d^gamma c) d^{alpha - gamma}: the Leibniz
// expansion shared by both representations since derivatives are undeformed.
template <typename Op, typename Mul>
Op compose_impl(const Op& d1, const Op& d2, Mul mul) {
    Op out(d1.nvars());
    for (const auto& [alpha, c] : d1.terms())
        for (const auto& [beta, e] : d2.terms())
            for_each_sub_index(alpha, [&](const Exponents& gamma, const Scalar& binom) {
                PolyExpr de = e.derivative(gamma);
                if (de.is_zero()) return;
                out.add_term(plus(minus(alpha, gamma), beta), mul(c, de) * binom);
            });
    return out;
}

}  // namespace

StarOperator op_compose(const StarOperator& d1, const StarOperator& d2, const ThetaMatrix& theta) {
    require_dims(d1.nvars(), d2.nvars(), theta);
    return compose_impl(d1, d2, [&](const PolyExpr& a, const PolyExpr& b) { return moyal_star(a, b, theta); });
}

PolyExpr op_apply(const StarOperator& d, const PolyExpr& f, const ThetaMatrix& theta) {
    require_dims(d.nvars(), f.nvars(), theta);
    PolyExpr out(f.nvars());
    for (const auto& [alpha, c] : d.terms()) out += moyal_star(c, f.derivative(alpha), theta);
    return out;
}

StarOperator op_adjoint(const StarOperator& d, const ThetaMatrix& theta) {
    require_dims(d.nvars(), d.nvars(), theta);
    StarOperator out(d.nvars());
    for (const auto& [alpha, c] : d.terms()) {
        const Scalar sign = total_degree(alpha) % 2 == 0 ? Scalar(1) : Scalar(-1);
        out += op_compose(StarOperator::derivative(alpha), StarOperator::multiplication(c.conj()), theta) * sign;
    }
    return out;
}

DiffOperator to_ordinary(const StarOperator& d, const ThetaMatrix& theta) {
    require_dims(d.nvars(), d.nvars(), theta);
    detail::BiTerms bi;
    for (const auto& [alpha, c] : d.terms())
        for (const auto& [e, v] : c.terms()) detail::add_to(bi, {e, alpha}, v);
    bi = detail::apply_twist(std::move(bi), theta, detail::RightLeg::Accumulate);
    DiffOperator out(d.nvars());
    for (const auto& [key, v] : bi) out.add_term(key.second, PolyExpr::monomial(key.first, v));
    return out;
}

StarOperator from_ordinary(const DiffOperator& d, const ThetaMatrix& theta) {
    require_dims(d.nvars(), d.nvars(), theta);
    // to_ordinary(c * d^alpha) = c . d^alpha + terms of lower coefficient
    // degree, so reading the remainder as a star operator converges.
    StarOperator out(d.nvars());
    DiffOperator rest = d;
    while (!rest.is_zero()) {
        for (const auto& [alpha, c] : rest.terms()) out.add_term(alpha, c);
        rest = d - to_ordinary(out, theta);
    }
    return out;
}

DiffOperator compose(const DiffOperator& d1, const DiffOperator& d2) {
    if (d1.nvars() != d2.nvars()) throw std::invalid_argument("operator dimension mismatch");
    return compose_impl(d1, d2, [](const PolyExpr& a, const PolyExpr& b) { return a * b; });
}

PolyExpr apply(const DiffOperator& d, const PolyExpr& f) {
    if (d.nvars() != f.nvars()) throw std::invalid_argument("operator dimension mismatch");
    PolyExpr out(f.nvars());
    for (const auto& [alpha, c] : d.terms()) out += c * f.derivative(alpha);
    return out;
}

DiffOperator adjoint(const DiffOperator& d) {
    DiffOperator out(d.nvars());
    for (const auto& [alpha, c] : d.terms()) {
        const Scalar sign = total_degree(alpha) % 2 == 0 ? Scalar(1) : Scalar(-1);
        out += compose(DiffOperator::derivative(alpha), DiffOperator::multiplication(c.conj())) * sign;
    }
    return out;
}

}  // namespace moyal::core
