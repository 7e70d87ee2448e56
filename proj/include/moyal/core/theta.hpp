#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "moyal/core/scalar.hpp"

namespace moyal::core {

/// Real antisymmetric deformation matrix with exact rational entries.
///
/// Sign convention: the coordinate algebra built from it satisfies
/// [x^h *, x^k] = +i Theta^{hk}.
class ThetaMatrix {
public:
    /// Zero matrix of the given dimension.
    explicit ThetaMatrix(std::size_t dim);
    /// Row-major entries; throws std::invalid_argument unless antisymmetric.
    ThetaMatrix(std::size_t dim, std::vector<Rational> entries);

    /// 2x2 matrix with Theta^{12} = t (i.e. t * epsilon^{ab}).
    static ThetaMatrix planar(const Rational& t);

    std::size_t dim() const { return dim_; }
    const Rational& operator()(std::size_t h, std::size_t k) const { return entries_[h * dim_ + k]; }
    bool is_zero() const;

    /// Bilinear form p_a Theta^{ab} q_b.
    Rational form(std::span<const Rational> p, std::span<const Rational> q) const;

    std::vector<double> to_double() const;

    friend bool operator==(const ThetaMatrix&, const ThetaMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

/// n-particle extension: Theta^{(i,mu),(j,nu)} = theta^{mu nu} for every pair i, j.
/// Variables are ordered particle-major: index = i * m + mu.
ThetaMatrix multiparticle_theta(const ThetaMatrix& single, std::size_t particles);

}  // namespace moyal::core
