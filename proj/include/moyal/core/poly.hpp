#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "moyal/core/scalar.hpp"

namespace moyal::core {

/// Exponent multi-index; also used for derivative multi-indices.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Sparse polynomial in `nvars` commuting coordinates with exact complex
/// coefficients. Zero coefficients are never stored, so equality is structural.
class PolyExpr {
public:
    using Terms = std::map<Exponents, Scalar>;

    explicit PolyExpr(std::size_t nvars);

    static PolyExpr constant(std::size_t nvars, const Scalar& c);
    static PolyExpr variable(std::size_t nvars, std::size_t index);
    static PolyExpr monomial(Exponents exps, const Scalar& c = Scalar(1));

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Degree of the highest term; 0 for the zero polynomial.
    unsigned degree() const;
    Scalar coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Scalar& c);

    PolyExpr derivative(std::size_t var) const;
    /// Multi-index derivative d^alpha.
    PolyExpr derivative(const Exponents& alpha) const;
    /// Complex conjugation of the coefficients (coordinates are real).
    PolyExpr conj() const;
    /// Moves every variable v to v + offset inside a polynomial on `nvars` variables.
    PolyExpr embed(std::size_t offset, std::size_t nvars) const;
    std::complex<double> evaluate(std::span<const double> point) const;
    /// Substitutes polynomials for each variable.
    PolyExpr substitute(std::span<const PolyExpr> images) const;

    PolyExpr& operator+=(const PolyExpr& o);
    PolyExpr& operator-=(const PolyExpr& o);
    PolyExpr& operator*=(const Scalar& c);

    friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
    friend PolyExpr operator-(PolyExpr a, const PolyExpr& b) { return a -= b; }
    friend PolyExpr operator*(PolyExpr a, const Scalar& c) { return a *= c; }
    friend PolyExpr operator*(const Scalar& c, PolyExpr a) { return a *= c; }
    PolyExpr operator-() const;
    /// Pointwise (commutative) product.
    friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);

    friend bool operator==(const PolyExpr&, const PolyExpr&) = default;

private:
    std::size_t nvars_;
    Terms terms_;
};

PolyExpr pow(const PolyExpr& p, unsigned exponent);

}  // namespace moyal::core
