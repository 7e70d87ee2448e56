#include <doctest.h>

#include <random>
#include <sstream>

#include "moyal/core/operator.hpp"
#include "moyal/core/random.hpp"
#include "moyal/hopf/deformed_basis.hpp"
#include "moyal/hopf/representation.hpp"
#include "moyal/hopf/uea.hpp"
#include "oracles.hpp"

using namespace moyal::hopf;
using moyal::core::DiffOperator;
using moyal::core::PolyExpr;
using moyal::core::ThetaMatrix;

namespace {

ThetaMatrix matrix3(std::initializer_list<long> upper) {
    // entries (0,1), (0,2), (1,2)
    auto it = upper.begin();
    std::vector<Rational> e(9, Rational(0));
    const std::pair<int, int> pos[] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [a, b] : pos) {
        e[a * 3 + b] = Rational(*it);
        e[b * 3 + a] = Rational(-*it);
        ++it;
    }
    return ThetaMatrix(3, e);
}

// Differential-operator realization: P_a = -i d_a, M_ab = i (x_a d_b - x_b d_a).
DiffOperator realize(const IsoAlgebra& alg, unsigned g) {
    const std::size_t m = alg.dim();
    const Scalar i = Scalar::i();
    if (alg.is_momentum(g)) return DiffOperator::derivative(m, g - alg.rotation_count()) * (-i);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (alg.rotation(a, b) == g) {
                const auto xa = DiffOperator::multiplication(PolyExpr::variable(m, a));
                const auto xb = DiffOperator::multiplication(PolyExpr::variable(m, b));
                return (compose(xa, DiffOperator::derivative(m, b)) - compose(xb, DiffOperator::derivative(m, a))) * i;
            }
    throw std::logic_error("unknown generator");
}

UEAElement combination(std::size_t m, const std::vector<std::pair<unsigned, Scalar>>& terms) {
    UEAElement e(m);
    for (const auto& [g, c] : terms) e += UEAElement::generator(m, g) * c;
    return e;
}

ModeBasis sample_modes() {
    return ModeBasis({{Rational(1), Rational(0)}, {Rational(0), Rational(2)}, {Rational(-1, 2), Rational(3, 4)}});
}

}  // namespace

TEST_CASE("iso(m) brackets match the differential-operator realization") {
    for (std::size_t m : {2u, 3u}) {
        const IsoAlgebra alg(m);
        for (unsigned g = 0; g < alg.generator_count(); ++g)
            for (unsigned h = 0; h < alg.generator_count(); ++h) {
                const DiffOperator lhs = compose(realize(alg, g), realize(alg, h)) - compose(realize(alg, h), realize(alg, g));
                DiffOperator rhs(m);
                for (const auto& [k, c] : alg.bracket(g, h)) rhs += realize(alg, k) * c;
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("jacobi identity and PBW ordering") {
    const std::size_t m = 3;
    const IsoAlgebra alg(m);
    for (unsigned a = 0; a < alg.generator_count(); ++a)
        for (unsigned b = 0; b < alg.generator_count(); ++b)
            for (unsigned c = 0; c < alg.generator_count(); ++c) {
                const auto A = UEAElement::generator(m, a), B = UEAElement::generator(m, b), C = UEAElement::generator(m, c);
                CHECK((commutator(A, commutator(B, C)) + commutator(B, commutator(C, A)) + commutator(C, commutator(A, B)))
                          .is_zero());
            }
    const auto P0 = UEAElement::momentum(m, 0);
    const auto M01 = UEAElement::generator(m, alg.rotation(0, 1));
    // P_0 M_01 = M_01 P_0 - [M_01, P_0] = M_01 P_0 + i P_1
    CHECK(P0 * M01 == M01 * P0 + UEAElement::momentum(m, 1) * Scalar::i());
    const UEAElement triple = P0 * M01 * P0;
    for (const auto& [w, c] : triple.terms()) CHECK(std::is_sorted(w.begin(), w.end()));
    // associativity of the normal-ordered product
    const auto M12 = UEAElement::generator(m, alg.rotation(1, 2));
    CHECK((P0 * M12) * M01 == P0 * (M12 * M01));
}

TEST_CASE("primitive coproduct") {
    const std::size_t m = 3;
    const auto P = UEAElement::momentum(m, 1);
    CHECK(coproduct(P) == TensorUEA::pure(P, UEAElement::one(m)) + TensorUEA::pure(UEAElement::one(m), P));
    const TensorUEA d3 = coproduct_iter(P, 3);
    TensorUEA expected(m, 3);
    for (std::size_t leg = 0; leg < 3; ++leg) expected += TensorUEA::in_leg(P, leg, 3);
    CHECK(d3 == expected);
    CHECK_THROWS(coproduct_iter(P, 1));

    const IsoAlgebra alg(m);
    const auto a = UEAElement::generator(m, alg.rotation(0, 2)) * UEAElement::momentum(m, 0) + P * Scalar(3);
    const auto b = UEAElement::generator(m, alg.rotation(0, 1)) + UEAElement::one(m);
    CHECK(coproduct(a * b) == coproduct(a) * coproduct(b));
    CHECK(counit_on_leg(coproduct(a), 0) == TensorUEA::in_leg(a, 0, 1));
    CHECK(counit_on_leg(coproduct(a), 1) == TensorUEA::in_leg(a, 0, 1));
    CHECK(coproduct_on_leg(coproduct(a), 0) == coproduct_on_leg(coproduct(a), 1));
    // iterated definition
    CHECK(coproduct_iter(a * b, 4) == coproduct_on_leg(coproduct_on_leg(coproduct(a * b), 1), 2));
    CHECK(counit(a) == Scalar(0));
    CHECK(counit(b) == Scalar(1));
    // antipode axiom: m (S (x) id) Delta(g) = eps(g) 1
    for (const auto& g : {a, b, a * b}) {
        const TensorUEA d = coproduct(g);
        UEAElement contracted(m);
        for (const auto& [key, c] : d.terms())
            contracted += antipode(UEAElement::word(m, key[0], c)) * UEAElement::word(m, key[1]);
        CHECK(contracted == UEAElement::one(m) * counit(g));
    }
    CHECK(multiply_legs(coproduct(P)) == P * Scalar(2));
}

TEST_CASE("twisted coproduct") {
    const std::size_t m = 3;
    const ThetaMatrix theta = matrix3({1, 0, 0});  // only theta^{12}
    for (std::size_t a = 0; a < m; ++a) {
        const auto P = UEAElement::momentum(m, a);
        CHECK(twisted_coproduct(P, theta) == coproduct(P));
    }
    const ThetaMatrix omega = matrix3({0, 1, 0});  // M_omega proportional to M_13
    const auto M = UEAElement::rotation(m, omega);
    const auto series = adjoint_series(twist_generator(theta), coproduct(M));
    REQUIRE(series.size() == 2);  // terminates at first order
    TensorUEA expected(m, 2);
    const auto comm = moyal::oracle::matrix_commutator(omega, theta);
    bool nonzero = false;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (sgn(comm[a * m + b]) == 0) continue;
            nonzero = true;
            expected += TensorUEA::pure(UEAElement::momentum(m, a), UEAElement::momentum(m, b)) * Scalar(comm[a * m + b]);
        }
    CHECK(nonzero);
    CHECK(twisted_coproduct(M, theta) - coproduct(M) == expected);

    // planar: commuting antisymmetric matrices give no correction
    const ThetaMatrix t2 = ThetaMatrix::planar(Rational(3));
    const auto M2 = UEAElement::rotation(2, ThetaMatrix::planar(Rational(5)));
    CHECK(twisted_coproduct(M2, t2) == coproduct(M2));
}

TEST_CASE("twisted coproduct is coassociative") {
    const std::size_t m = 3;
    const ThetaMatrix theta = matrix3({2, -1, 3});
    const IsoAlgebra alg(m);
    for (unsigned g = 0; g < alg.generator_count(); ++g) {
        const auto x = UEAElement::generator(m, g);
        const TensorUEA d = twisted_coproduct(x, theta);
        const TensorUEA left = twisted_coproduct_on_leg(d, 0, theta);
        const TensorUEA right = twisted_coproduct_on_leg(d, 1, theta);
        CHECK(left == right);
        CHECK(left == twisted_coproduct3(x, theta));
    }
    const auto product = UEAElement::generator(m, 0) * UEAElement::momentum(m, 2);
    CHECK(twisted_coproduct(product, theta) == twisted_coproduct(UEAElement::generator(m, 0), theta) *
                                                   twisted_coproduct(UEAElement::momentum(m, 2), theta));
}

TEST_CASE("twist counit and beta") {
    const ThetaMatrix theta = matrix3({1, 2, -1});
    const TensorUEA f = twist_element(theta, 4);
    CHECK(counit_on_leg(f, 0) == TensorUEA::one(3, 1));
    CHECK(counit_on_leg(f, 1) == TensorUEA::one(3, 1));
    CHECK(twist_beta(theta, 4) == UEAElement::one(3));
}

TEST_CASE("mode files") {
    std::istringstream in("# momenta\n1 0\n0, 1/2\n\n-0.5 3\n");
    const ModeBasis modes = ModeBasis::read(in);
    CHECK(modes.size() == 3);
    CHECK(modes[2][0] == Rational(-1, 2));
    std::istringstream dup("1 0\n1 0\n");
    CHECK_THROWS(ModeBasis::read(dup));
    std::istringstream empty("# nothing\n");
    CHECK_THROWS(ModeBasis::read(empty));
}

TEST_CASE("twist and R-matrix in the plane-wave representation") {
    const ModeBasis modes = sample_modes();
    const ThetaMatrix theta = ThetaMatrix::planar(Rational(2, 3));
    const PhaseTensor f2 = f_matrix(modes, 2, theta);
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 3; ++q)
            CHECK(f2.angle({p, q}) == theta.form(modes[p], modes[q]) / 2);
    const PhaseTensor f3 = f_matrix(modes, 3, theta);
    for (std::size_t flat = 0; flat < f3.size(); ++flat) {
        const auto idx = f3.multi_index(flat);
        Rational pairwise(0);
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t t = s + 1; t < 3; ++t) pairwise += f2.angle({idx[s], idx[t]});
        CHECK(f3.angle(flat) == pairwise);
    }
    for (std::size_t flat = 0; flat < 9; ++flat) CHECK(f_matrix(modes, 2, ThetaMatrix(2)).angle(flat) == 0);

    const PhaseTensor r = r_matrix(modes, theta);
    for (std::size_t p = 0; p < 3; ++p) {
        CHECK(r.angle({p, p}) == 0);
        for (std::size_t q = 0; q < 3; ++q) CHECK(r.angle({p, q}) == theta.form(modes[q], modes[p]));
    }
    CHECK(check_cocycle(theta, modes) < 1e-12);
    CHECK(check_twist_counit(theta, modes) < 1e-12);
    CHECK(check_r_inverse(modes, theta) < 1e-12);
    CHECK(check_r_unitarity(modes, theta) < 1e-12);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        const ThetaMatrix t3 = moyal::core::random_theta(rng, 3);
        std::vector<Momentum> ps;
        for (int k = 0; k < 3; ++k) {
            Momentum p;
            for (int a = 0; a < 3; ++a) p.push_back(Rational(long(rng() % 9) - 4, long(rng() % 3) + 1));
            ps.push_back(p);
        }
        ps[1][0] += 100;  // keep distinct
        ps[2][1] += 200;
        CHECK(check_cocycle(t3, ModeBasis(ps)) < 1e-12);
    }
}

TEST_CASE("twisted permutations form a representation of S3") {
    const ModeBasis modes = sample_modes();
    const ThetaMatrix theta = ThetaMatrix::planar(Rational(5, 4));
    const auto perms = all_permutations(3);
    CHECK(perms.size() == 6);
    for (const auto& s : perms)
        for (const auto& t : perms) {
            const Eigen::MatrixXcd lhs = twisted_permutation(s, modes, theta) * twisted_permutation(t, modes, theta);
            CHECK((lhs - twisted_permutation(compose(s, t), modes, theta)).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((permutation_matrix(s, 3) * permutation_matrix(t, 3) - permutation_matrix(compose(s, t), 3))
                      .cwiseAbs()
                      .maxCoeff() == 0);
        }
    const Eigen::MatrixXcd id = twisted_permutation({0, 1, 2}, modes, theta);
    CHECK((id - Eigen::MatrixXcd::Identity(27, 27)).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::MatrixXcd swap = twisted_permutation({1, 0, 2}, modes, theta);
    CHECK((swap * swap - Eigen::MatrixXcd::Identity(27, 27)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((twisted_permutation({2, 0, 1}, modes, ThetaMatrix(2)) - permutation_matrix({2, 0, 1}, 3)).cwiseAbs().maxCoeff() <
          1e-15);
    CHECK_THROWS(twisted_permutation({0, 0, 1}, modes, theta));
    for (int sign : {1, -1}) {
        const Eigen::MatrixXcd a = twisted_symmetrizer(3, modes, theta, sign);
        CHECK((a * a - a).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("deformed two-particle basis") {
    const ModeBasis modes = sample_modes();
    const ThetaMatrix theta = ThetaMatrix::planar(Rational(7, 3));
    for (int sign : {1, -1})
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(deformed_basis(i, j, modes, theta, sign).mismatch() < 1e-12);
    const auto flat = deformed_basis(0, 2, modes, ThetaMatrix(2), -1);
    CHECK(std::abs(flat.with_r[2] - 1.0) < 1e-15);
    CHECK(std::abs(flat.with_r[6] + 1.0) < 1e-15);
    const auto same = deformed_basis(1, 1, modes, theta, 1);
    CHECK(std::abs(same.with_r[4] - 2.0) < 1e-15);
    CHECK(same.with_r.cwiseAbs().sum() == doctest::Approx(2.0));
}

TEST_CASE("deformed slater determinants") {
    const ModeBasis modes = sample_modes();
    const ThetaMatrix theta = ThetaMatrix::planar(Rational(7, 3));
    const SlaterState one = slater_hat({1}, modes, theta);
    CHECK(std::abs(one.coefficients[1] - 1.0) < 1e-15);
    CHECK(slater_hat({2, 2}, modes, theta).vanished);
    CHECK(slater_hat({0, 2, 0}, modes, theta).vanished);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            const auto pair = deformed_basis(i, j, modes, theta, -1);
            CHECK((slater_hat({i, j}, modes, theta).coefficients - pair.with_r / std::sqrt(2.0)).cwiseAbs().maxCoeff() <
                  1e-12);
        }
    // normalized and antisymmetric under the twisted antisymmetrizer
    const SlaterState s3 = slater_hat({0, 1, 2}, modes, theta);
    CHECK(s3.coefficients.norm() == doctest::Approx(1.0));
    const Eigen::MatrixXcd a = twisted_symmetrizer(3, modes, theta, -1);
    CHECK((a * s3.coefficients - s3.coefficients).cwiseAbs().maxCoeff() < 1e-12);
}
