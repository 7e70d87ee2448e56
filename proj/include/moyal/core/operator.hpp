#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>

#include "moyal/core/poly.hpp"
#include "moyal/core/theta.hpp"

namespace moyal::core {

/// Finite sum  sum_alpha c_alpha(x) o d^alpha  keyed by the derivative
/// multi-index. The tag decides how a coefficient acts: by left Moyal
/// multiplication (StarOperator) or by ordinary multiplication (DiffOperator).
/// Both representations are unique, so equality is structural.
template <typename Tag>
class LinearOperator {
public:
    using Terms = std::map<Exponents, PolyExpr>;

    explicit LinearOperator(std::size_t nvars) : nvars_(nvars) {}

    static LinearOperator identity(std::size_t nvars) { return multiplication(PolyExpr::constant(nvars, Scalar(1))); }

    static LinearOperator multiplication(const PolyExpr& c) {
        LinearOperator op(c.nvars());
        op.add_term(Exponents(c.nvars(), 0), c);
        return op;
    }

    static LinearOperator derivative(std::size_t nvars, std::size_t var) {
        if (var >= nvars) throw std::out_of_range("derivative variable out of range");
        Exponents alpha(nvars, 0);
        alpha[var] = 1;
        return derivative(alpha);
    }

    static LinearOperator derivative(const Exponents& alpha) {
        LinearOperator op(alpha.size());
        op.add_term(alpha, PolyExpr::constant(alpha.size(), Scalar(1)));
        return op;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PolyExpr coefficient(const Exponents& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? PolyExpr(nvars_) : it->second;
    }

    void add_term(const Exponents& alpha, const PolyExpr& c) {
        if (alpha.size() != nvars_ || c.nvars() != nvars_)
            throw std::invalid_argument("operator term arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Largest derivative order carried by any term.
    unsigned order() const {
        unsigned d = 0;
        for (const auto& [alpha, c] : terms_) d = std::max(d, total_degree(alpha));
        return d;
    }

    /// Moves variables to offset.. inside an operator on `nvars` variables.
    LinearOperator embed(std::size_t offset, std::size_t nvars) const {
        LinearOperator out(nvars);
        for (const auto& [alpha, c] : terms_) {
            Exponents a(nvars, 0);
            std::copy(alpha.begin(), alpha.end(), a.begin() + static_cast<std::ptrdiff_t>(offset));
            out.add_term(a, c.embed(offset, nvars));
        }
        return out;
    }

    LinearOperator& operator+=(const LinearOperator& o) {
        check(o);
        for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
        return *this;
    }
    LinearOperator& operator-=(const LinearOperator& o) {
        check(o);
        for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
        return *this;
    }
    LinearOperator& operator*=(const Scalar& s) {
        if (s.is_zero()) terms_.clear();
        for (auto& [alpha, c] : terms_) c *= s;
        return *this;
    }

    friend LinearOperator operator+(LinearOperator a, const LinearOperator& b) { return a += b; }
    friend LinearOperator operator-(LinearOperator a, const LinearOperator& b) { return a -= b; }
    friend LinearOperator operator*(LinearOperator a, const Scalar& s) { return a *= s; }
    friend LinearOperator operator*(const Scalar& s, LinearOperator a) { return a *= s; }
    LinearOperator operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const LinearOperator&, const LinearOperator&) = default;

private:
    void check(const LinearOperator& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("operator dimension mismatch");
    }

    std::size_t nvars_;
    Terms terms_;
};

struct StarActionTag {};
struct OrdinaryActionTag {};

/// sum c_alpha * d^alpha with coefficients acting by left Moyal product.
using StarOperator = LinearOperator<StarActionTag>;
/// sum c_alpha . d^alpha with coefficients acting pointwise.
using DiffOperator = LinearOperator<OrdinaryActionTag>;

/// D1 o D2, using (f*) o (g*) = (f*g)* and d o (f*) = (df)* + (f*) o d.
StarOperator op_compose(const StarOperator& d1, const StarOperator& d2, const ThetaMatrix& theta);
/// Coefficients act by moyal_star from the left, derivatives ordinarily.
PolyExpr op_apply(const StarOperator& d, const PolyExpr& f, const ThetaMatrix& theta);
/// Formal L^2 adjoint: (c * d^alpha)^dagger = (-1)^|alpha| d^alpha o (conj(c) *).
StarOperator op_adjoint(const StarOperator& d, const ThetaMatrix& theta);

/// Rewrites each c * d^alpha as an ordinary differential operator.
DiffOperator to_ordinary(const StarOperator& d, const ThetaMatrix& theta);
/// Inverse of to_ordinary.
StarOperator from_ordinary(const DiffOperator& d, const ThetaMatrix& theta);

/// Ordinary composition (Leibniz rule).
DiffOperator compose(const DiffOperator& d1, const DiffOperator& d2);
PolyExpr apply(const DiffOperator& d, const PolyExpr& f);
/// Formal L^2 adjoint of an ordinary differential operator.
DiffOperator adjoint(const DiffOperator& d);

}  // namespace moyal::core
