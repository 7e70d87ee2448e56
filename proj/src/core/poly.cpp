#include "moyal/core/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace moyal::core {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

PolyExpr::PolyExpr(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw std::invalid_argument("polynomial needs at least one variable");
}

PolyExpr PolyExpr::constant(std::size_t nvars, const Scalar& c) {
    PolyExpr p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

PolyExpr PolyExpr::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e));
}

PolyExpr PolyExpr::monomial(Exponents exps, const Scalar& c) {
    PolyExpr p(exps.size());
    p.add_term(exps, c);
    return p;
}

unsigned PolyExpr::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Scalar PolyExpr::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void PolyExpr::add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != nvars_) throw std::invalid_argument("monomial arity does not match polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyExpr PolyExpr::derivative(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("derivative variable out of range");
    PolyExpr out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        out.add_term(d, c * Scalar(static_cast<long>(e[var])));
    }
    return out;
}

PolyExpr PolyExpr::derivative(const Exponents& alpha) const {
    if (alpha.size() != nvars_) throw std::invalid_argument("derivative multi-index arity mismatch");
    PolyExpr out(nvars_);
    for (const auto& [e, c] : terms_) {
        Scalar coef = c;
        Exponents d = e;
        bool vanishes = false;
        for (std::size_t v = 0; v < nvars_ && !vanishes; ++v) {
            if (alpha[v] > e[v]) {
                vanishes = true;
                break;
            }
            for (unsigned j = 0; j < alpha[v]; ++j) coef *= Scalar(static_cast<long>(e[v] - j));
            d[v] -= alpha[v];
        }
        if (!vanishes) out.add_term(d, coef);
    }
    return out;
}

PolyExpr PolyExpr::conj() const {
    PolyExpr out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
    return out;
}

PolyExpr PolyExpr::embed(std::size_t offset, std::size_t nvars) const {
    if (offset + nvars_ > nvars) throw std::invalid_argument("embed: target space too small");
    PolyExpr out(nvars);
    for (const auto& [e, c] : terms_) {
        Exponents d(nvars, 0);
        std::copy(e.begin(), e.end(), d.begin() + static_cast<std::ptrdiff_t>(offset));
        out.terms_.emplace(std::move(d), c);
    }
    return out;
}

std::complex<double> PolyExpr::evaluate(std::span<const double> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
    std::complex<double> acc = 0;
    for (const auto& [e, c] : terms_) {
        double mono = 1;
        for (std::size_t v = 0; v < nvars_; ++v)
            for (unsigned j = 0; j < e[v]; ++j) mono *= point[v];
        acc += c.to_complex() * mono;
    }
    return acc;
}

PolyExpr PolyExpr::substitute(std::span<const PolyExpr> images) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitute: need one image per variable");
    const std::size_t target = images.front().nvars();
    PolyExpr out(target);
    for (const auto& [e, c] : terms_) {
        PolyExpr term = constant(target, c);
        for (std::size_t v = 0; v < nvars_; ++v)
            if (e[v] != 0) term = term * pow(images[v], e[v]);
        out += term;
    }
    return out;
}

PolyExpr& PolyExpr::operator+=(const PolyExpr& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyExpr& PolyExpr::operator-=(const PolyExpr& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyExpr& PolyExpr::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

PolyExpr PolyExpr::operator-() const {
    PolyExpr out(*this);
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial dimension mismatch");
    PolyExpr out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(a.nvars_);
            for (std::size_t v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    return out;
}

PolyExpr pow(const PolyExpr& p, unsigned exponent) {
    PolyExpr result = PolyExpr::constant(p.nvars(), Scalar(1));
    for (unsigned k = 0; k < exponent; ++k) result = result * p;
    return result;
}

}  // namespace moyal::core
