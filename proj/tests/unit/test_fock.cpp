#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "moyal/fock/field.hpp"
#include "moyal/fock/operators.hpp"
#include "moyal/hopf/representation.hpp"
#include "oracles.hpp"

using namespace moyal;
using fock::FockBasis;
using fock::Statistics;
using core::Rational;

namespace {

hopf::ModeBasis planar_modes(std::size_t count) {
    const std::vector<hopf::Momentum> all = {
        {Rational(1), Rational(0)},  {Rational(0), Rational(1)},   {Rational(1, 2), Rational(-1)},
        {Rational(-2), Rational(1, 3)}, {Rational(3, 2), Rational(2)}};
    return hopf::ModeBasis(std::vector<hopf::Momentum>(all.begin(), all.begin() + long(count)));
}

Eigen::MatrixXcd dense(const fock::FockMatrix& m) { return Eigen::MatrixXcd(m); }

}  // namespace

TEST_CASE("basis ordering and counts") {
    const FockBasis bose(Statistics::Bose, 2, 2);
    REQUIRE(bose.size() == 6);
    CHECK(bose.state(0) == fock::Occupation{0, 0});
    CHECK(bose.state(1) == fock::Occupation{1, 0});
    CHECK(bose.state(2) == fock::Occupation{0, 1});
    CHECK(bose.state(3) == fock::Occupation{2, 0});
    CHECK(bose.state(5) == fock::Occupation{0, 2});
    const FockBasis fermi(Statistics::Fermi, 3, 3);
    CHECK(fermi.size() == 8);
    CHECK(fermi.sector(2).size() == 3);
    CHECK_FALSE(fermi.index_of({2, 0, 0}).has_value());
    CHECK_THROWS_AS(FockBasis(Statistics::Bose, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(FockBasis(Statistics::Bose, 2, 0), std::invalid_argument);
}

TEST_CASE("canonical relations on the truncation") {
    SUBCASE("single Bose mode") {
        const FockBasis basis(Statistics::Bose, 1, 2);
        const auto l = fock::build_ccr(basis);
        const fock::FockMatrix c = l.annihilate[0] * l.create[0] - l.create[0] * l.annihilate[0];
        CHECK(fock::interior_residual(c - fock::identity(basis), basis) < 1e-14);
        // The top sector is cut: a a^+ - a^+ a there is -2 instead of 1.
        CHECK(l.edge_states == std::vector<std::size_t>{2});
        CHECK(std::abs(dense(c)(2, 2) - std::complex<double>(-2.0)) < 1e-14);
    }
    for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
        CAPTURE(fock::to_string(s));
        const FockBasis basis(s, 3, 3);
        const auto l = fock::build_ccr(basis);
        const double sign = fock::exchange_sign(s);
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = 0; q < 3; ++q) {
                fock::FockMatrix aa = l.annihilate[p] * l.annihilate[q] - sign * fock::FockMatrix(l.annihilate[q] * l.annihilate[p]);
                CHECK(dense(aa).cwiseAbs().maxCoeff() < 1e-14);
                fock::FockMatrix mixed = l.annihilate[p] * l.create[q] - sign * fock::FockMatrix(l.create[q] * l.annihilate[p]);
                if (p == q) mixed -= fock::identity(basis);
                CHECK(fock::interior_residual(mixed, basis) < 1e-14);
            }
        if (s == Statistics::Fermi)
            for (const auto& c : l.create) CHECK(dense(fock::FockMatrix(c * c)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("ladder matrices match the product-space oracle") {
    for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
        CAPTURE(fock::to_string(s));
        const unsigned nmax = 3;
        const FockBasis basis(s, 3, nmax);
        const auto l = fock::build_ccr(basis);
        const oracle::ProductSpace space(s, 3, nmax);
        std::vector<long> map(space.size(), -1);
        for (std::size_t i = 0; i < space.size(); ++i)
            if (auto j = basis.index_of(space.occupation(i))) map[i] = long(*j);
        for (std::size_t p = 0; p < 3; ++p) {
            const Eigen::MatrixXcd lib = dense(l.annihilate[p]);
            double worst = 0;
            for (std::size_t i = 0; i < space.size(); ++i)
                for (std::size_t j = 0; j < space.size(); ++j)
                    if (map[i] >= 0 && map[j] >= 0)
                        worst = std::max(worst, std::abs(lib(map[i], map[j]) - space.a[p](long(i), long(j))));
            CHECK(worst < 1e-14);
        }
    }
}

TEST_CASE("Jordan-Schwinger map") {
    const auto modes = planar_modes(3);
    const FockBasis basis(Statistics::Bose, 3, 2);
    const auto l = fock::build_ccr(basis);
    const auto p1 = fock::jordan_schwinger(hopf::UEAElement::momentum(2, 0), modes, basis, l);
    const auto p2 = fock::jordan_schwinger(hopf::UEAElement::momentum(2, 1), modes, basis, l);
    Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(long(basis.size()));
    vacuum[0] = 1.0;
    CHECK((p1 * vacuum).norm() == 0.0);
    for (std::size_t p = 0; p < 3; ++p) {
        const Eigen::VectorXcd one = l.create[p] * vacuum;
        CHECK((p1 * one - modes[p][0].get_d() * one).norm() < 1e-14);
        CHECK((p2 * one - modes[p][1].get_d() * one).norm() < 1e-14);
    }
    CHECK(dense(fock::FockMatrix(p1 * p2 - p2 * p1)).cwiseAbs().maxCoeff() < 1e-14);
    // sigma(1) is the number operator.
    CHECK(dense(fock::jordan_schwinger(hopf::UEAElement::one(2), modes, basis, l) - fock::number_operator(basis))
              .cwiseAbs()
              .maxCoeff() < 1e-14);

    const auto omega = core::ThetaMatrix::planar(Rational(1));
    CHECK_THROWS_AS(fock::jordan_schwinger(hopf::UEAElement::rotation(2, omega), modes, basis, l), fock::ModeSpanError);
    // A rotation fixing every mode: the zero momentum alone.
    const hopf::ModeBasis rest({{Rational(0), Rational(0)}});
    const FockBasis rest_basis(Statistics::Bose, 1, 2);
    const auto zero = fock::jordan_schwinger(hopf::UEAElement::rotation(2, omega), rest, rest_basis,
                                             fock::build_ccr(rest_basis));
    CHECK(zero.nonZeros() == 0);
    CHECK_THROWS_AS(fock::jordan_schwinger(hopf::UEAElement::momentum(2, 0) * hopf::UEAElement::momentum(2, 1), modes,
                                           basis, l),
                    std::invalid_argument);
}

TEST_CASE("dressing") {
    const auto modes = planar_modes(3);
    const auto theta = core::ThetaMatrix::planar(Rational(3, 4));
    for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
        const FockBasis basis(s, 3, 3);
        const auto l = fock::build_ccr(basis);
        const auto undeformed = fock::dress(modes, basis, l, core::ThetaMatrix(2));
        for (std::size_t p = 0; p < 3; ++p)
            CHECK(dense(undeformed.create[p] - l.create[p]).cwiseAbs().maxCoeff() < 1e-15);
        const auto d = fock::dress(modes, basis, l, theta);
        CHECK(fock::adjointness_residual(d) < 1e-14);
        CHECK(fock::vacuum_residual(d, basis) == 0.0);
    }
    // One mode: p theta p = 0.
    const hopf::ModeBasis single({{Rational(2), Rational(-1)}});
    const FockBasis basis(Statistics::Bose, 1, 4);
    const auto l = fock::build_ccr(basis);
    const auto d = fock::dress(single, basis, l, theta);
    CHECK(dense(d.create[0] - l.create[0]).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("twisted exchange relations against a dense oracle") {
    const std::vector<Rational> thetas = {Rational(0), Rational(1, 3), Rational(-1), Rational(5, 2), Rational(7)};
    for (Statistics s : {Statistics::Bose, Statistics::Fermi})
        for (std::size_t M : {2u, 3u, 4u})
            for (const Rational& t : thetas) {
                CAPTURE(fock::to_string(s));
                CAPTURE(M);
                CAPTURE(t.get_d());
                const auto modes = planar_modes(M);
                const auto theta = core::ThetaMatrix::planar(t);
                const unsigned nmax = s == Statistics::Bose ? 3 : unsigned(M);
                const FockBasis basis(s, M, nmax);
                const auto d = fock::dress(modes, basis, fock::build_ccr(basis), theta);
                const auto res = fock::verify_hqccr(d, hopf::r_matrix(modes, theta), basis);
                CHECK(res.max() < 1e-12);

                CHECK(oracle::twisted_exchange_residual(s, modes, nmax, theta) < 1e-12);
            }
}

TEST_CASE("wrong R phases are detected") {
    const auto modes = planar_modes(3);
    const auto theta = core::ThetaMatrix::planar(Rational(1));
    const FockBasis basis(Statistics::Bose, 3, 3);
    const auto d = fock::dress(modes, basis, fock::build_ccr(basis), theta);
    // The inverse R swaps the phase; the relations must then fail.
    CHECK(fock::verify_hqccr(d, hopf::r_matrix(modes, theta).inverse(), basis).max() > 1e-3);
    CHECK_THROWS_AS(fock::verify_hqccr(d, hopf::r_matrix(planar_modes(2), theta), basis), std::invalid_argument);
}

TEST_CASE("sector dimensions match undeformed counts") {
    const auto modes = planar_modes(3);
    CHECK(fock::sector_dimension(modes, Statistics::Fermi, 2, 3, core::ThetaMatrix::planar(Rational(1, 2))) == 3);
    CHECK(fock::sector_dimension(planar_modes(2), Statistics::Bose, 2, 2, core::ThetaMatrix::planar(Rational(3))) == 3);
    for (Statistics s : {Statistics::Bose, Statistics::Fermi})
        for (const Rational& t : {Rational(0), Rational(1, 2), Rational(3)})
            for (unsigned n = 0; n <= 3; ++n)
                CHECK(fock::sector_dimension(modes, s, n, 3, core::ThetaMatrix::planar(t)) ==
                      fock::undeformed_sector_dimension(s, 3, n));
    CHECK(fock::undeformed_sector_dimension(Statistics::Bose, 4, 3) == 20);
    CHECK(fock::undeformed_sector_dimension(Statistics::Fermi, 4, 5) == 0);
    CHECK_THROWS_AS(fock::sector_dimension(modes, Statistics::Bose, 4, 3, core::ThetaMatrix(2)), std::out_of_range);
}

TEST_CASE("field operator algebra") {
    const std::vector<std::vector<double>> samples = {{0.0, 0.0}, {0.3, -1.1}, {2.5, 0.7}};
    for (Statistics s : {Statistics::Bose, Statistics::Fermi})
        for (const Rational& t : {Rational(0), Rational(2, 3), Rational(-4)}) {
            CAPTURE(fock::to_string(s));
            const auto r = fock::field_star_algebra(planar_modes(3), s, 3, samples, core::ThetaMatrix::planar(t));
            CHECK(r.field_exchange < 1e-12);
            CHECK(r.conjugate_exchange < 1e-12);
            CHECK(r.delta_limit < 1e-12);
            CHECK(r.invariance < 1e-12);
            CHECK(r.number_operator < 1e-12);
        }

    // Operators with nonzero charge do pick up the phase.
    const auto modes = planar_modes(2);
    const FockBasis basis(Statistics::Bose, 2, 2);
    const auto l = fock::build_ccr(basis);
    const auto theta = core::ThetaMatrix::planar(Rational(1));
    const auto c0 = fock::operator_element(l.create[0], modes[0], 1);
    const auto c1 = fock::operator_element(l.create[1], modes[1], 1);
    const auto prod = fock::star(c0, c1, theta).evaluate({0.0, 0.0});
    const auto plain = fock::product(c0, c1).evaluate({0.0, 0.0});
    const double angle = -hopf::form(modes[0], theta, modes[1]).get_d() / 2;
    CHECK((dense(prod) - std::polar(1.0, angle) * dense(plain)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(angle) > 0.1);
}
