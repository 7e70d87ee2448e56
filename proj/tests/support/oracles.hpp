#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance runner. Each one recomputes a quantity from its definition
// without going through the library routine it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "moyal/core/poly.hpp"
#include "moyal/core/star.hpp"
#include "moyal/core/theta.hpp"
#include "moyal/dynamics/landau.hpp"
#include "moyal/fock/basis.hpp"
#include "moyal/hopf/modes.hpp"
#include "moyal/numeric/grid.hpp"

namespace moyal::oracle {

using core::Exponents;
using core::PolyExpr;
using core::Rational;
using core::Scalar;
using core::ThetaMatrix;

/// Brute-force bidifferential sum over all index tuples (h1,k1)...(hk,kk).
inline PolyExpr star(const PolyExpr& a, const PolyExpr& b, const ThetaMatrix& theta) {
    const std::size_t n = theta.dim();
    const unsigned top = std::min(a.degree(), b.degree());
    PolyExpr out(n);
    Scalar prefactor(1);
    for (unsigned k = 0; k <= top; ++k) {
        if (k > 0) prefactor = prefactor * Scalar(Rational(0), Rational(1, 2)) / Scalar(static_cast<long>(k));
        std::vector<std::size_t> idx(2 * k, 0);
        while (true) {
            Scalar w = prefactor;
            Exponents da(n, 0), db(n, 0);
            for (unsigned j = 0; j < k; ++j) {
                w *= Scalar(theta(idx[2 * j], idx[2 * j + 1]));
                ++da[idx[2 * j]];
                ++db[idx[2 * j + 1]];
            }
            if (!w.is_zero()) out += a.derivative(da) * b.derivative(db) * w;
            std::size_t p = 0;
            while (p < idx.size() && idx[p] == n - 1) idx[p++] = 0;
            if (p == idx.size()) break;
            ++idx[p];
        }
    }
    return out;
}

/// [omega, theta] as an explicit matrix product, row-major.
inline std::vector<Rational> matrix_commutator(const ThetaMatrix& w, const ThetaMatrix& t) {
    const std::size_t m = w.dim();
    std::vector<Rational> out(m * m, Rational(0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) out[a * m + b] += w(a, c) * t(c, b) - t(a, c) * w(c, b);
    return out;
}

/// h_* f = -scale sum_a D_a * (D_a * f) with D_a f = d_a f + (i b eps^{ab} x^b) * f,
/// every star product taken with the brute-force oracle on the multiparticle theta.
inline PolyExpr landau(const dynamics::LandauParams& p, const PolyExpr& f, std::size_t particles) {
    const std::size_t n = 2 * particles;
    const ThetaMatrix theta = core::multiparticle_theta(ThetaMatrix::planar(p.theta), particles);
    PolyExpr out(n);
    for (std::size_t k = 0; k < particles; ++k) {
        const PolyExpr x1 = PolyExpr::variable(n, 2 * k), x2 = PolyExpr::variable(n, 2 * k + 1);
        const PolyExpr a1 = x2 * Scalar(Rational(0), p.b);
        const PolyExpr a2 = x1 * Scalar(Rational(0), -p.b);
        const auto D1 = [&](const PolyExpr& g) { return g.derivative(2 * k) + star(a1, g, theta); };
        const auto D2 = [&](const PolyExpr& g) { return g.derivative(2 * k + 1) + star(a2, g, theta); };
        out += D1(D1(f)) + D2(D2(f));
    }
    return out * Scalar(Rational(-p.scale));
}

/// Ladder operators on the full product space of M modes with per-mode
/// cutoff (Bose) or the Jordan-Wigner construction (Fermi), built from
/// Kronecker products without reference to the library basis.
struct ProductSpace {
    std::size_t M;
    std::size_t local;
    std::vector<Eigen::MatrixXcd> a;

    ProductSpace(fock::Statistics s, std::size_t modes, unsigned cutoff)
        : M(modes), local(s == fock::Statistics::Bose ? cutoff + 1 : 2) {
        const long l = long(local);
        Eigen::MatrixXcd single = Eigen::MatrixXcd::Zero(l, l);
        for (std::size_t n = 1; n < local; ++n) single(long(n - 1), long(n)) = std::sqrt(double(n));
        Eigen::MatrixXcd parity = Eigen::MatrixXcd::Identity(l, l);
        if (s == fock::Statistics::Fermi) parity(1, 1) = -1.0;
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(l, l);
        for (std::size_t p = 0; p < M; ++p) {
            Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
            for (std::size_t k = 0; k < M; ++k) {
                const Eigen::MatrixXcd& f = k < p ? parity : k == p ? single : id;
                Eigen::MatrixXcd next(op.rows() * f.rows(), op.cols() * f.cols());
                for (long i = 0; i < op.rows(); ++i)
                    for (long j = 0; j < op.cols(); ++j)
                        next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = op(i, j) * f;
                op = next;
            }
            a.push_back(op);
        }
    }
    std::size_t size() const { return std::size_t(a.front().rows()); }
    /// Occupation of a product-basis state (first mode most significant).
    fock::Occupation occupation(std::size_t index) const {
        fock::Occupation occ(M);
        for (std::size_t k = M; k-- > 0;) {
            occ[k] = unsigned(index % local);
            index /= local;
        }
        return occ;
    }
};

/// Dresses the product-space operators with exp(+-(i/2) p theta Q) and
/// returns the largest residual of the three exchange families, with the
/// R phase written out as exp(i q theta p), on states with N <= nmax - 1.
inline double twisted_exchange_residual(fock::Statistics s, const hopf::ModeBasis& modes, unsigned nmax,
                                        const ThetaMatrix& theta) {
    const std::size_t M = modes.size();
    const ProductSpace space(s, M, nmax);
    const long n = long(space.size());
    std::vector<Eigen::MatrixXcd> ad, cd;
    for (std::size_t p = 0; p < M; ++p) {
        Eigen::VectorXcd phase(n);
        for (long i = 0; i < n; ++i) {
            const auto occ = space.occupation(std::size_t(i));
            double angle = 0;
            for (std::size_t k = 0; k < M; ++k) angle += occ[k] * hopf::form(modes[p], theta, modes[k]).get_d() / 2;
            phase[i] = std::polar(1.0, angle);
        }
        ad.push_back(space.a[p] * phase.asDiagonal());
        cd.push_back(space.a[p].adjoint() * phase.conjugate().asDiagonal());
    }
    const double sign = s == fock::Statistics::Bose ? 1 : -1;
    double worst = 0;
    for (std::size_t p = 0; p < M; ++p)
        for (std::size_t q = 0; q < M; ++q) {
            const std::complex<double> r = std::polar(1.0, hopf::form(modes[q], theta, modes[p]).get_d());
            const std::complex<double> r_mixed = std::polar(1.0, hopf::form(modes[p], theta, modes[q]).get_d());
            const Eigen::MatrixXcd e1 = ad[p] * ad[q] - sign * r * ad[q] * ad[p];
            const Eigen::MatrixXcd e2 = cd[p] * cd[q] - sign * r * cd[q] * cd[p];
            Eigen::MatrixXcd e3 = ad[p] * cd[q] - sign * r_mixed * cd[q] * ad[p];
            if (p == q) e3 -= Eigen::MatrixXcd::Identity(n, n);
            for (long j = 0; j < n; ++j) {
                unsigned total = 0;
                for (unsigned o : space.occupation(std::size_t(j))) total += o;
                if (total + 1 > nmax) continue;
                worst = std::max({worst, e1.col(j).cwiseAbs().maxCoeff(), e2.col(j).cwiseAbs().maxCoeff(),
                                  e3.col(j).cwiseAbs().maxCoeff()});
            }
        }
    return worst;
}

/// The double Fourier sum at one point, with naive DFTs on physical
/// frequencies and coordinates; t is theta^{12} (ignored for m = 1).
inline std::complex<double> grid_star_at(const numeric::GridFunction& a, const numeric::GridFunction& b, double t,
                                         const std::vector<double>& x) {
    using cd = std::complex<double>;
    const numeric::GridSpec& s = a.spec;
    const std::size_t size = s.size();
    std::vector<cd> A(size, 0.0), B(size, 0.0);
    std::vector<std::vector<double>> freq(size);
    for (std::size_t f = 0; f < size; ++f) {
        freq[f] = s.m == 1 ? std::vector<double>{s.frequency(f)}
                           : std::vector<double>{s.frequency(f / s.n), s.frequency(f % s.n)};
        for (std::size_t j = 0; j < size; ++j) {
            const auto p = s.point(j);
            double kx = 0;
            for (std::size_t c = 0; c < s.m; ++c) kx += freq[f][c] * p[c];
            A[f] += a.values[j] * std::polar(1.0, -kx);
            B[f] += b.values[j] * std::polar(1.0, -kx);
        }
    }
    cd out = 0;
    for (std::size_t h = 0; h < size; ++h)
        for (std::size_t k = 0; k < size; ++k) {
            double angle = 0;
            for (std::size_t c = 0; c < s.m; ++c) angle += (freq[h][c] + freq[k][c]) * x[c];
            if (s.m == 2) angle -= 0.5 * t * (freq[h][0] * freq[k][1] - freq[h][1] * freq[k][0]);
            out += A[h] * B[k] * std::polar(1.0, angle);
        }
    return out / double(size * size);
}

}  // namespace moyal::oracle
