#include "moyal/fock/operators.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace moyal::fock {

using core::Rational;
using core::Scalar;
using Triplet = Eigen::Triplet<std::complex<double>>;

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

FockMatrix from_triplets(std::size_t n, const std::vector<Triplet>& t) {
    FockMatrix m(idx(n), idx(n));
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

FockMatrix diagonal(const std::vector<std::complex<double>>& d) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0.0) t.emplace_back(idx(i), idx(i), d[i]);
    return from_triplets(d.size(), t);
}

double max_abs(const FockMatrix& m) {
    double out = 0;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
        for (FockMatrix::InnerIterator it(m, k); it; ++it) out = std::max(out, std::abs(it.value()));
    return out;
}

void check_modes(const hopf::ModeBasis& modes, const FockBasis& basis) {
    if (modes.size() != basis.modes()) throw std::invalid_argument("mode set does not match Fock basis");
}

}  // namespace

Ladder build_ccr(const FockBasis& basis) {
    const std::size_t M = basis.modes();
    const bool fermi = basis.statistics() == Statistics::Fermi;
    Ladder out;
    for (std::size_t p = 0; p < M; ++p) {
        std::vector<Triplet> t;
        for (std::size_t s = 0; s < basis.size(); ++s) {
            Occupation occ = basis.state(s);
            if (fermi && occ[p] == 1) continue;
            double amp = std::sqrt(double(occ[p] + 1));
            if (fermi) {
                unsigned before = 0;
                for (std::size_t i = 0; i < p; ++i) before += occ[i];
                amp = (before % 2 == 0) ? 1.0 : -1.0;
            }
            ++occ[p];
            if (auto target = basis.index_of(occ)) t.emplace_back(idx(*target), idx(s), amp);
        }
        FockMatrix create = from_triplets(basis.size(), t);
        out.annihilate.emplace_back(create.adjoint());
        out.create.push_back(std::move(create));
    }
    for (std::size_t s = 0; s < basis.size(); ++s)
        if (basis.particle_number(s) == basis.nmax()) out.edge_states.push_back(s);
    return out;
}

Ladder build_ccr(const hopf::ModeBasis& modes, Statistics statistics, unsigned nmax) {
    return build_ccr(FockBasis(statistics, modes.size(), nmax));
}

FockMatrix identity(const FockBasis& basis) {
    return diagonal(std::vector<std::complex<double>>(basis.size(), 1.0));
}

FockMatrix number_operator(const FockBasis& basis) {
    std::vector<std::complex<double>> d(basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s) d[s] = double(basis.particle_number(s));
    return diagonal(d);
}

std::vector<hopf::Momentum> state_momenta(const hopf::ModeBasis& modes, const FockBasis& basis) {
    check_modes(modes, basis);
    std::vector<hopf::Momentum> out;
    out.reserve(basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s) {
        hopf::Momentum total(modes.dim(), Rational(0));
        const Occupation& occ = basis.state(s);
        for (std::size_t p = 0; p < modes.size(); ++p)
            for (std::size_t a = 0; a < modes.dim(); ++a) total[a] += occ[p] * modes[p][a];
        out.push_back(std::move(total));
    }
    return out;
}

double interior_residual(const FockMatrix& m, const FockBasis& basis) {
    double out = 0;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
        if (basis.particle_number(std::size_t(k)) + 1 > basis.nmax()) continue;
        for (FockMatrix::InnerIterator it(m, k); it; ++it) out = std::max(out, std::abs(it.value()));
    }
    return out;
}

FockMatrix jordan_schwinger(const hopf::UEAElement& g, const hopf::ModeBasis& modes, const FockBasis& basis,
                            const Ladder& ladder) {
    check_modes(modes, basis);
    const hopf::IsoAlgebra& alg = g.algebra();
    if (alg.dim() != modes.dim()) throw std::invalid_argument("generator dimension does not match modes");
    const std::size_t m = alg.dim();

    // g |> e_p = eigen[p] e_p + (x-linear part), the latter must vanish.
    std::vector<Scalar> eigen(modes.size());
    std::vector<std::vector<Scalar>> x_coeff(modes.size(), std::vector<Scalar>(m));
    for (const auto& [word, c] : g.terms()) {
        if (word.empty()) {
            for (auto& e : eigen) e += c;
        } else if (word.size() > 1) {
            throw std::invalid_argument("jordan_schwinger: only generators and 1 are supported");
        } else if (alg.is_momentum(word[0])) {
            const std::size_t a = word[0] - alg.rotation_count();
            for (std::size_t p = 0; p < modes.size(); ++p) eigen[p] += c * Scalar(modes[p][a]);
        } else {
            // M_ab e_p = -(x_a p_b - x_b p_a) e_p.
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b) {
                    if (alg.rotation(a, b) != word[0]) continue;
                    for (std::size_t p = 0; p < modes.size(); ++p) {
                        x_coeff[p][a] -= c * Scalar(modes[p][b]);
                        x_coeff[p][b] += c * Scalar(modes[p][a]);
                    }
                }
        }
    }
    for (std::size_t p = 0; p < modes.size(); ++p)
        for (const Scalar& c : x_coeff[p])
            if (!c.is_zero()) throw ModeSpanError("generator maps mode " + std::to_string(p) + " out of the mode span");

    FockMatrix out(idx(basis.size()), idx(basis.size()));
    for (std::size_t p = 0; p < modes.size(); ++p)
        if (!eigen[p].is_zero()) out += eigen[p].to_complex() * (ladder.create[p] * ladder.annihilate[p]);
    out.prune(std::complex<double>(0.0));
    return out;
}

Ladder dress(const hopf::ModeBasis& modes, const FockBasis& basis, const Ladder& ladder,
             const core::ThetaMatrix& theta) {
    check_modes(modes, basis);
    if (modes.dim() != theta.dim()) throw std::invalid_argument("dress: theta dimension does not match modes");
    const auto totals = state_momenta(modes, basis);
    Ladder out;
    out.edge_states = ladder.edge_states;
    for (std::size_t p = 0; p < modes.size(); ++p) {
        std::vector<std::complex<double>> d(basis.size());
        for (std::size_t s = 0; s < basis.size(); ++s)
            d[s] = std::polar(1.0, Rational(hopf::form(modes[p], theta, totals[s]) / 2).get_d());
        const FockMatrix phase = diagonal(d);
        out.annihilate.emplace_back(ladder.annihilate[p] * phase);
        out.create.emplace_back(ladder.create[p] * FockMatrix(phase.adjoint()));
    }
    return out;
}

double HqccrResidual::max() const { return std::max({annihilators, creators, mixed}); }

HqccrResidual verify_hqccr(const Ladder& dressed, const hopf::PhaseTensor& r, const FockBasis& basis) {
    const std::size_t M = basis.modes();
    if (dressed.create.size() != M || dressed.annihilate.size() != M || r.modes() != M || r.order() != 2)
        throw std::invalid_argument("verify_hqccr: operator, R-matrix and basis sizes differ");
    for (const auto& a : dressed.annihilate)
        if (std::size_t(a.rows()) != basis.size()) throw std::invalid_argument("verify_hqccr: basis mismatch");
    const double sign = exchange_sign(basis.statistics());
    const FockMatrix one = identity(basis);
    HqccrResidual out;
    for (std::size_t p = 0; p < M; ++p)
        for (std::size_t q = 0; q < M; ++q) {
            const auto& a = dressed.annihilate;
            const auto& c = dressed.create;
            const std::complex<double> rpq = r.phase({p, q});
            const std::complex<double> rqp = r.phase({q, p});
            FockMatrix aa = a[p] * a[q] - sign * rpq * FockMatrix(a[q] * a[p]);
            FockMatrix cc = c[p] * c[q] - sign * rpq * FockMatrix(c[q] * c[p]);
            FockMatrix ac = a[p] * c[q] - sign * rqp * FockMatrix(c[q] * a[p]);
            if (p == q) ac -= one;
            out.annihilators = std::max(out.annihilators, interior_residual(aa, basis));
            out.creators = std::max(out.creators, interior_residual(cc, basis));
            out.mixed = std::max(out.mixed, interior_residual(ac, basis));
        }
    return out;
}

double adjointness_residual(const Ladder& ladder) {
    double out = 0;
    for (std::size_t p = 0; p < ladder.create.size(); ++p)
        out = std::max(out, max_abs(FockMatrix(ladder.annihilate[p].adjoint()) - ladder.create[p]));
    return out;
}

double vacuum_residual(const Ladder& ladder, const FockBasis& basis) {
    Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(idx(basis.size()));
    vacuum[0] = 1.0;
    double out = 0;
    for (const auto& a : ladder.annihilate) out = std::max(out, (a * vacuum).cwiseAbs().maxCoeff());
    return out;
}

std::size_t sector_dimension(const hopf::ModeBasis& modes, Statistics statistics, unsigned n, unsigned nmax,
                             const core::ThetaMatrix& theta) {
    if (n > nmax) throw std::out_of_range("sector_dimension: n exceeds nmax");
    const FockBasis basis(statistics, modes.size(), nmax);
    const Ladder dressed = dress(modes, basis, build_ccr(basis), theta);

    std::vector<Eigen::VectorXcd> layer(1, Eigen::VectorXcd::Zero(idx(basis.size())));
    layer[0][0] = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        std::vector<Eigen::VectorXcd> next;
        next.reserve(layer.size() * modes.size());
        for (const auto& v : layer)
            for (const auto& c : dressed.create) next.emplace_back(c * v);
        layer = std::move(next);
    }
    Eigen::MatrixXcd span(idx(basis.size()), idx(layer.size()));
    for (std::size_t j = 0; j < layer.size(); ++j) span.col(idx(j)) = layer[j];
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(span);
    qr.setThreshold(1e-10);
    return std::size_t(qr.rank());
}

std::size_t undeformed_sector_dimension(Statistics statistics, std::size_t modes, unsigned n) {
    const auto binomial = [](std::size_t top, std::size_t k) -> std::size_t {
        if (k > top) return 0;
        std::size_t out = 1;
        for (std::size_t i = 1; i <= k; ++i) out = out * (top - k + i) / i;
        return out;
    };
    return statistics == Statistics::Bose ? binomial(modes + n - 1, n) : binomial(modes, n);
}

}  // namespace moyal::fock
