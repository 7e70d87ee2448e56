#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "moyal/core/poly.hpp"
#include "moyal/core/theta.hpp"

namespace moyal::core {

/// Moyal product a * b. The bidifferential series terminates on
/// polynomials, so the result is exact:
///   sum_k (1/k!) (i/2)^k Theta^{h1k1}...Theta^{hkkk} (d_h1..d_hk a)(d_k1..d_kk b).
/// Throws std::invalid_argument on dimension mismatch.
PolyExpr moyal_star(const PolyExpr& a, const PolyExpr& b, const ThetaMatrix& theta);

/// a * b - b * a.
PolyExpr star_commutator(const PolyExpr& a, const PolyExpr& b, const ThetaMatrix& theta);

/// Phase angle phi (in radians) of exp(i h.x) * exp(i k.x) = exp(i phi) exp(i (h+k).x),
/// i.e. phi = -(1/2) h Theta k.
Rational exponential_star_angle(std::span<const Rational> h, std::span<const Rational> k, const ThetaMatrix& theta);

/// Coefficients over ordered star-monomials x^{h1} * x^{h2} * ... with
/// h1 <= h2 <= ... (0-based indices). The empty sequence is the unit.
struct StarPolyCoeffs {
    std::size_t nvars = 0;
    std::map<std::vector<std::size_t>, Scalar> terms;

    friend bool operator==(const StarPolyCoeffs&, const StarPolyCoeffs&) = default;
};

/// Evaluates x^{h1} * x^{h2} * ... * x^{hk} as an ordinary polynomial.
PolyExpr star_monomial(std::span<const std::size_t> sequence, std::size_t nvars, const ThetaMatrix& theta);

/// Rewrites f as a combination of ordered star-monomials (recursive
/// leading-term elimination). inverse_weyl(weyl_normal_form(f)) == f.
StarPolyCoeffs weyl_normal_form(const PolyExpr& f, const ThetaMatrix& theta);

PolyExpr inverse_weyl(const StarPolyCoeffs& coeffs, const ThetaMatrix& theta);

/// poly(x) * exp(-alpha |x|^2), the decaying test functions on which the
/// terminating expansion can be cross-checked against the numeric layer.
struct PolyGaussian {
    PolyExpr poly;
    Rational alpha;

    PolyGaussian derivative(std::size_t var) const;
    std::complex<double> evaluate(std::span<const double> point) const;
};

/// p * F for a polynomial p on the left; the series terminates at deg p.
PolyGaussian star_poly_left(const PolyExpr& p, const PolyGaussian& f, const ThetaMatrix& theta);
/// F * p for a polynomial p on the right.
PolyGaussian star_poly_right(const PolyGaussian& f, const PolyExpr& p, const ThetaMatrix& theta);

}  // namespace moyal::core
