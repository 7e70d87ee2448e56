#pragma once

#include <complex>
#include <vector>

#include "moyal/core/theta.hpp"
#include "moyal/numeric/grid.hpp"

namespace moyal::numeric {

enum class StarMethod {
    /// Twisted convolution of the two spectra, O(N^{2m}).
    Spectral,
    /// sum_h a_h e^{ihx} b(x + theta h / 2), one shifted inverse transform per h.
    Shifted,
};

struct StarOptions {
    StarMethod method = StarMethod::Spectral;
    /// Spectral weight in the outer band relative to the peak above which
    /// the result is flagged as aliased.
    double aliasing_tolerance = 1e-10;
};

struct StarResult {
    GridFunction value;
    /// Largest relative spectral magnitude of either input with
    /// |frequency index| >= 3N/8 on some axis.
    double outer_band = 0;
    bool aliasing = false;
};

/// a * b from  int dh dk e^{i(h + k).x - (i/2) h theta k} a~(h) b~(k),
/// on the periodic grid. theta must be m x m.
/// Throws std::invalid_argument on spec or dimension mismatch.
StarResult grid_star(const GridFunction& a, const GridFunction& b, const core::ThetaMatrix& theta,
                     const StarOptions& options = {});

/// Relative spectral weight of f in the outer band (see StarResult).
double outer_band_weight(const GridFunction& f);

/// Exact f * g for two windowed plane waves centred at the origin, from the
/// Gaussian integral of the Fourier form. theta is m x m.
std::complex<double> windowed_wave_star_exact(const WindowedWave& f, const WindowedWave& g,
                                              const core::ThetaMatrix& theta, const std::vector<double>& x);

/// exp(-alpha |x|^2) * exp(-beta |x|^2) = factor exp(-gamma |x|^2) in the
/// plane with theta^{12} = t: factor = 1/(1 + alpha beta t^2),
/// gamma = (alpha + beta) factor.
struct GaussianProduct {
    core::Rational factor;
    core::Rational gamma;
};
GaussianProduct gaussian_star_gaussian(const core::Rational& alpha, const core::Rational& beta, const core::Rational& t);

/// For a = q * exp(-alpha|x|^2) (a poly-Gaussian) and b = exp(-beta|x|^2),
/// a * b = q * (factor exp(-gamma |x|^2)) by associativity; the result is a
/// terminating expansion in the polynomial q. Planar theta^{12} = t.
struct PolyGaussianPair {
    core::PolyGaussian left;
    core::PolyGaussian right;
    core::PolyGaussian product;
};
PolyGaussianPair poly_gaussian_pair(const core::PolyExpr& q, const core::Rational& alpha, const core::Rational& beta,
                                    const core::Rational& t);

}  // namespace moyal::numeric
