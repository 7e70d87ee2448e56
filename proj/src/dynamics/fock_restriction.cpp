#include "moyal/dynamics/fock_restriction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "moyal/fock/operators.hpp"
#include "moyal/hopf/representation.hpp"

namespace moyal::dynamics {

using core::Rational;

double RestrictionReport::max() const { return std::max({undeformed, twisted, additivity}); }

namespace {

Eigen::MatrixXcd fock_hamiltonian(const fock::Ladder& ladder, const std::vector<double>& energy,
                                  const std::vector<std::size_t>& sector) {
    fock::FockMatrix h(ladder.create.front().rows(), ladder.create.front().cols());
    for (std::size_t p = 0; p < energy.size(); ++p) h += energy[p] * (ladder.create[p] * ladder.annihilate[p]);
    const Eigen::MatrixXcd full(h);
    Eigen::MatrixXcd out(long(sector.size()), long(sector.size()));
    for (std::size_t i = 0; i < sector.size(); ++i)
        for (std::size_t j = 0; j < sector.size(); ++j) out(long(i), long(j)) = full(long(sector[i]), long(sector[j]));
    return out;
}

}  // namespace

RestrictionReport fock_restriction_check(const hopf::ModeBasis& modes, fock::Statistics statistics, unsigned n,
                                         unsigned nmax, const core::ThetaMatrix& theta, const Rational& scale) {
    if (n == 0 || n > nmax) throw std::invalid_argument("fock_restriction_check: need 1 <= n <= nmax");
    const std::size_t M = modes.size();
    std::vector<double> energy(M);
    for (std::size_t p = 0; p < M; ++p) {
        Rational e(0);
        for (const Rational& c : modes[p]) e += c * c;
        energy[p] = Rational(scale * e).get_d();
    }

    const fock::FockBasis basis(statistics, M, nmax);
    const fock::Ladder ladder = fock::build_ccr(basis);
    const std::vector<std::size_t> sector = basis.sector(n);

    // Direct n-particle operator, diagonal on modes^{(x) n}.
    const hopf::PhaseTensor shape(M, n);
    Eigen::VectorXcd direct(long(shape.size()));
    for (std::size_t flat = 0; flat < shape.size(); ++flat) {
        double e = 0;
        for (std::size_t i : shape.multi_index(flat)) e += energy[i];
        direct[long(flat)] = e;
    }

    // K: sector state -> normalized (anti)symmetrization of its mode word.
    const int sign = fock::exchange_sign(statistics);
    const Eigen::MatrixXcd symmetrizer = hopf::twisted_symmetrizer(n, modes, core::ThetaMatrix(modes.dim()), sign);
    Eigen::MatrixXcd embed(long(shape.size()), long(sector.size()));
    for (std::size_t j = 0; j < sector.size(); ++j) {
        std::vector<std::size_t> word;
        const fock::Occupation& occ = basis.state(sector[j]);
        for (std::size_t p = 0; p < M; ++p) word.insert(word.end(), occ[p], p);
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(long(shape.size()));
        e[long(shape.flat_index(word))] = 1.0;
        const Eigen::VectorXcd v = symmetrizer * e;
        embed.col(long(j)) = v / v.norm();
    }
    const Eigen::MatrixXcd twist = n >= 2 ? hopf::f_matrix(modes, n, theta).matrix()
                                          : Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(long(M), long(M)));
    const Eigen::MatrixXcd twisted_embed = twist * embed;

    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(long(sector.size()), long(sector.size()));
    for (std::size_t j = 0; j < sector.size(); ++j) {
        double e = 0;
        for (std::size_t p = 0; p < M; ++p) e += basis.state(sector[j])[p] * energy[p];
        expected(long(j), long(j)) = e;
    }

    const Eigen::MatrixXcd h_fock = fock_hamiltonian(ladder, energy, sector);
    const Eigen::MatrixXcd h_dressed = fock_hamiltonian(fock::dress(modes, basis, ladder, theta), energy, sector);

    RestrictionReport out;
    out.particles = n;
    out.undeformed = (h_fock - embed.adjoint() * direct.asDiagonal() * embed).cwiseAbs().maxCoeff();
    out.twisted =
        (h_dressed - twisted_embed.adjoint() * direct.asDiagonal() * twisted_embed).cwiseAbs().maxCoeff();
    out.additivity = (h_fock - expected).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace moyal::dynamics
