#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "moyal/core/theta.hpp"
#include "moyal/fock/operators.hpp"

namespace moyal::fock {

/// c * exp(i k . X) (x) op, where X lists the coordinates of all sample
/// points (point-major) and op carries translation charge op_momentum
/// (P_a |> a^+_p = p_a a^+_p, P_a |> a^p = -p_a a^p).
struct FieldTerm {
    std::complex<double> coeff;
    std::vector<core::Rational> wave;
    FockMatrix op;
    hopf::Momentum op_momentum;
};

/// Operator-valued function of `points` points in R^m.
class FieldElement {
public:
    FieldElement(std::size_t m, std::size_t points) : m_(m), points_(points) {}

    std::size_t dim() const { return m_; }
    std::size_t points() const { return points_; }
    const std::vector<FieldTerm>& terms() const { return terms_; }

    void add(FieldTerm t);
    /// Total translation charge of a term: wave summed over points plus op_momentum.
    hopf::Momentum charge(const FieldTerm& t) const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator*=(std::complex<double> c);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a += b * -1.0; }
    friend FieldElement operator*(FieldElement a, std::complex<double> c) { return a *= c; }

    /// Fock matrix at the given coordinates (points * m values).
    FockMatrix evaluate(const std::vector<double>& coords) const;

private:
    std::size_t m_;
    std::size_t points_;
    std::vector<FieldTerm> terms_;
};

/// Pointwise product with Fock matrices multiplied in order.
FieldElement product(const FieldElement& a, const FieldElement& b);
/// Twisted product: each pair of terms gets exp(-(i/2) h theta k) from the
/// charges h, k of the two factors.
FieldElement star(const FieldElement& a, const FieldElement& b, const core::ThetaMatrix& theta);

/// phi(x_point) = sum_p exp(i p . x_point) a^p.
FieldElement field(const hopf::ModeBasis& modes, const Ladder& ladder, std::size_t point, std::size_t points);
/// phi*(x_point) = sum_p exp(-i p . x_point) a^+_p.
FieldElement field_conjugate(const hopf::ModeBasis& modes, const Ladder& ladder, std::size_t point,
                             std::size_t points);
/// Constant function times op.
FieldElement operator_element(const FockMatrix& op, const hopf::Momentum& charge, std::size_t points);
/// Plane wave exp(i k . X) times the identity.
FieldElement plane_wave(std::vector<core::Rational> wave, std::size_t m, const FockBasis& basis);

struct FieldReport {
    double field_exchange = 0;       // [phi(x) *, phi(y)]_-+
    double conjugate_exchange = 0;   // [phi(x) *, phi*(y)]_-+ - phi_i(x) * phi_i*(y)
    double delta_limit = 0;          // rhs against sum_p exp(ip(x - y)) at theta = 0 only
    double invariance = 0;           // phi(x) * w - phi(x) w and w * phi(x) - w phi(x)
    double number_operator = 0;      // a^+_i * a^i - N
    double max() const;
};

/// Evaluates the field relations at each sample pair (x, y), on the
/// truncation interior N <= nmax - 1. Samples hold m coordinates each.
FieldReport field_star_algebra(const hopf::ModeBasis& modes, Statistics statistics, unsigned nmax,
                               const std::vector<std::vector<double>>& samples, const core::ThetaMatrix& theta);

}  // namespace moyal::fock
