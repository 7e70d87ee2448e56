#include "moyal/dynamics/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace moyal::dynamics {

namespace {

using cd = std::complex<double>;
using SpMat = Eigen::SparseMatrix<cd>;

struct Ladder {
    std::size_t extent;  // per-axis size of the extended basis
    SpMat x, y, dx, dy;
};

std::size_t index_of(std::size_t plus, std::size_t minus, std::size_t extent) { return plus * extent + minus; }

// x^a and d_a through circular ladder operators a_+, a_- with oscillator
// length l:  a_x = (a_+ + a_-)/sqrt2,  a_y = i(a_+ - a_-)/sqrt2,
// x = l (a_x + a_x^+)/sqrt2,  d_x = (a_x - a_x^+)/(sqrt2 l).
Ladder make_ladder(std::size_t extent, double length) {
    const std::size_t dim = extent * extent;
    std::vector<Eigen::Triplet<cd>> tp, tm;
    for (std::size_t p = 0; p < extent; ++p)
        for (std::size_t m = 0; m < extent; ++m) {
            if (p > 0) tp.emplace_back(index_of(p - 1, m, extent), index_of(p, m, extent), std::sqrt(double(p)));
            if (m > 0) tm.emplace_back(index_of(p, m - 1, extent), index_of(p, m, extent), std::sqrt(double(m)));
        }
    SpMat ap(dim, dim), am(dim, dim);
    ap.setFromTriplets(tp.begin(), tp.end());
    am.setFromTriplets(tm.begin(), tm.end());
    const double r2 = std::sqrt(2.0);
    const cd i(0, 1);
    SpMat ax = (ap + am) / r2;
    SpMat ay = (ap - am) * (i / r2);
    SpMat axd = SpMat(ax.adjoint());
    SpMat ayd = SpMat(ay.adjoint());
    return {extent, (ax + axd) * (length / r2), (ay + ayd) * (length / r2), (ax - axd) / (r2 * length),
            (ay - ayd) / (r2 * length)};
}

SpMat power(const SpMat& a, unsigned k) {
    SpMat out(a.rows(), a.cols());
    out.setIdentity();
    for (unsigned j = 0; j < k; ++j) out = SpMat(out * a);
    return out;
}

SpMat assemble(const core::DiffOperator& h, std::size_t basis_size, double length) {
    if (h.nvars() != 2) throw std::invalid_argument("planar_spectrum: operator must act on two variables");
    unsigned deg = 0;
    for (const auto& [alpha, c] : h.terms()) deg = std::max(deg, core::total_degree(alpha) + c.degree());
    const Ladder L = make_ladder(basis_size + deg, length);
    const std::size_t dim = L.extent * L.extent;
    SpMat full(dim, dim);
    for (const auto& [alpha, c] : h.terms()) {
        const SpMat deriv = SpMat(power(L.dx, alpha[0]) * power(L.dy, alpha[1]));
        for (const auto& [e, coef] : c.terms()) full += SpMat(power(L.x, e[0]) * power(L.y, e[1]) * deriv) * coef.to_complex();
    }
    const std::size_t n = basis_size * basis_size;
    std::vector<Eigen::Triplet<cd>> kept;
    auto restricted = [&](Eigen::Index e) -> long {
        const std::size_t p = static_cast<std::size_t>(e) / L.extent, m = static_cast<std::size_t>(e) % L.extent;
        return p < basis_size && m < basis_size ? static_cast<long>(index_of(p, m, basis_size)) : -1;
    };
    for (Eigen::Index col = 0; col < full.outerSize(); ++col)
        for (SpMat::InnerIterator it(full, col); it; ++it) {
            const long r = restricted(it.row()), c = restricted(it.col());
            if (r >= 0 && c >= 0) kept.emplace_back(r, c, it.value());
        }
    SpMat out(n, n);
    out.setFromTriplets(kept.begin(), kept.end());
    return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
}

using LevelKey = std::tuple<unsigned, unsigned, std::size_t>;

}  // namespace

std::vector<SpectrumLevel> Spectrum::converged_levels() const {
    std::vector<SpectrumLevel> out;
    std::copy_if(levels.begin(), levels.end(), std::back_inserter(out), [](const auto& l) { return l.converged; });
    return out;
}

Spectrum planar_spectrum(const core::DiffOperator& h, std::size_t basis_size, double length_squared) {
    if (basis_size == 0) throw std::invalid_argument("planar_spectrum: empty basis");
    if (!(length_squared > 0)) throw std::invalid_argument("planar_spectrum: oscillator length must be positive");
    const SpMat H = assemble(h, basis_size, std::sqrt(length_squared));
    double norm = 0;
    for (Eigen::Index col = 0; col < H.outerSize(); ++col)
        for (SpMat::InnerIterator it(H, col); it; ++it) norm = std::max(norm, std::abs(it.value()));
    const SpMat skew = SpMat(H - SpMat(H.adjoint()));
    for (Eigen::Index col = 0; col < skew.outerSize(); ++col)
        for (SpMat::InnerIterator it(skew, col); it; ++it)
            if (std::abs(it.value()) > 1e-9 * std::max(norm, 1.0))
                throw std::domain_error("planar_spectrum: operator is not hermitian on the oscillator basis");

    const std::size_t n = static_cast<std::size_t>(H.rows());
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const double cut = 1e-12 * std::max(norm, 1.0);
    for (Eigen::Index col = 0; col < H.outerSize(); ++col)
        for (SpMat::InnerIterator it(H, col); it; ++it)
            if (std::abs(it.value()) > cut)
                parent[find_root(parent, static_cast<std::size_t>(it.row()))] =
                    find_root(parent, static_cast<std::size_t>(it.col()));

    std::map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t s = 0; s < n; ++s) blocks[find_root(parent, s)].push_back(s);

    Spectrum out{basis_size, {}};
    for (const auto& [root, states] : blocks) {
        // label: lowest total quantum number, then lowest n+
        std::size_t lead = states.front();
        auto rank = [&](std::size_t s) {
            const std::size_t p = s / basis_size, m = s % basis_size;
            return std::pair(p + m, p);
        };
        for (std::size_t s : states)
            if (rank(s) < rank(lead)) lead = s;
        Eigen::MatrixXcd block(states.size(), states.size());
        for (std::size_t r = 0; r < states.size(); ++r)
            for (std::size_t c = 0; c < states.size(); ++c)
                block(r, c) = H.coeff(static_cast<Eigen::Index>(states[r]), static_cast<Eigen::Index>(states[c]));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block, Eigen::EigenvaluesOnly);
        for (Eigen::Index j = 0; j < solver.eigenvalues().size(); ++j)
            out.levels.push_back({solver.eigenvalues()[j], static_cast<unsigned>(lead / basis_size),
                                  static_cast<unsigned>(lead % basis_size), static_cast<std::size_t>(j), false, 0});
    }
    std::sort(out.levels.begin(), out.levels.end(), [](const auto& a, const auto& b) {
        return std::tie(a.value, a.label_plus, a.label_minus, a.index) <
               std::tie(b.value, b.label_plus, b.label_minus, b.index);
    });
    return out;
}

Spectrum landau_spectrum(const LandauParams& p, std::size_t basis_size, const SpectrumOptions& options) {
    p.validate();
    if (sgn(p.b) <= 0) throw std::invalid_argument("landau_spectrum: requires b > 0");
    if (sgn(p.deformation_factor()) <= 0) throw std::invalid_argument("landau_spectrum: requires 1 + b*theta/2 > 0");
    const core::DiffOperator h = core::to_ordinary(landau_h_star_built(p), ThetaMatrix::planar(p.theta));
    const double l2 = options.length_squared > 0 ? options.length_squared : 1.0 / p.b.get_d();

    Spectrum coarse = planar_spectrum(h, basis_size, l2);
    const Spectrum fine = planar_spectrum(h, 2 * basis_size, l2);
    std::map<LevelKey, double> reference;
    for (const auto& l : fine.levels) reference[{l.label_plus, l.label_minus, l.index}] = l.value;
    for (auto& l : coarse.levels) {
        auto it = reference.find({l.label_plus, l.label_minus, l.index});
        if (it == reference.end()) continue;
        l.converged = std::abs(it->second - l.value) <= options.convergence_tolerance * std::max(std::abs(l.value), 1e-12);
    }
    for (auto& l : coarse.levels) {
        if (!l.converged) continue;
        for (const auto& o : coarse.levels)
            if (o.converged &&
                std::abs(o.value - l.value) <= options.multiplicity_tolerance * std::max(std::abs(l.value), 1e-12))
                ++l.multiplicity;
    }
    return coarse;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
    out << "index,eigenvalue,multiplicity,converged\n";
    out.precision(17);
    for (std::size_t i = 0; i < spectrum.levels.size(); ++i) {
        const auto& l = spectrum.levels[i];
        out << i << ',' << l.value << ',' << l.multiplicity << ',' << (l.converged ? 1 : 0) << '\n';
    }
}

}  // namespace moyal::dynamics
