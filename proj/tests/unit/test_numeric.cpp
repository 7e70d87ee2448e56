#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "moyal/numeric/grid.hpp"
#include "moyal/numeric/grid_star.hpp"
#include "oracles.hpp"

using namespace moyal;
using numeric::GridFunction;
using numeric::GridSpec;
using core::Rational;
using cd = std::complex<double>;

namespace {

double interior_error(const GridFunction& f, const std::function<cd(const std::vector<double>&)>& exact,
                      double radius) {
    double out = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const auto x = f.spec.point(i);
        double r2 = 0;
        for (double c : x) r2 += c * c;
        if (r2 > radius * radius) continue;
        out = std::max(out, std::abs(f.values[i] - exact(x)));
    }
    return out;
}

}  // namespace

TEST_CASE("grid spec and sampling") {
    CHECK_THROWS_AS((GridSpec{3, 16, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{2, 24, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{2, 16, 0}.validate()), std::invalid_argument);
    const GridSpec s{2, 64, 8};
    CHECK(s.coordinate(0) == -8.0);
    CHECK(s.coordinate(32) == 0.0);
    CHECK(s.centered(63) == -1);

    const auto g = numeric::sample(numeric::Gaussian{{0, 0}, 1}, s);
    const std::size_t origin = 32 * 64 + 32;
    CHECK(g.values[origin].real() == doctest::Approx(1 / (2 * std::numbers::pi)).epsilon(1e-15));
    CHECK(std::abs(numeric::grid_integral(g) - 1.0) < 1e-10);

    const auto w = numeric::sample(numeric::WindowedWave{{1, 0}, 0.5}, s);
    const auto x = s.point(origin + 3);
    CHECK(std::abs(w.values[origin + 3] - std::polar(std::exp(-0.5 * (x[0] * x[0] + x[1] * x[1])), x[0])) < 1e-15);

    // Hermite n = 1 is odd; normalized.
    const GridSpec line{1, 128, 10};
    const auto h1 = numeric::sample(numeric::Hermite{{1}, 1}, line);
    for (std::size_t j = 1; j < 64; ++j) CHECK(std::abs(h1.values[64 + j] + h1.values[64 - j]) < 1e-15);
    GridFunction sq(line);
    for (std::size_t j = 0; j < line.n; ++j) sq.values[j] = std::norm(h1.values[j]);
    CHECK(std::abs(numeric::grid_integral(sq) - 1.0) < 1e-12);

    CHECK_THROWS_AS(numeric::sample(numeric::Gaussian{{0}, 1}, s), std::invalid_argument);
}

TEST_CASE("grid star agrees with the direct Fourier sum") {
    const GridSpec s{2, 16, 5};
    const auto a = numeric::sample(numeric::WindowedWave{{1.2, -0.4}, 0.6}, s);
    const auto b = numeric::sample(numeric::Hermite{{1, 2}, 1}, s);
    for (double t : {0.0, 0.7, -2.0}) {
        const auto theta = core::ThetaMatrix::planar(Rational(t));
        const auto spectral = numeric::grid_star(a, b, theta).value;
        const auto shifted = numeric::grid_star(a, b, theta, {numeric::StarMethod::Shifted}).value;
        CHECK(numeric::max_difference(spectral, shifted) < 1e-12);
        for (std::size_t i : {0u, 17u, 100u, 136u, 200u, 255u})
            CHECK(std::abs(spectral.values[i] - oracle::grid_star_at(a, b, t, s.point(i))) < 1e-12);
    }
    const GridSpec line{1, 32, 6};
    const auto c = numeric::sample(numeric::Gaussian{{0.5}, 1}, line);
    const auto d = numeric::sample(numeric::Hermite{{3}, 1}, line);
    const auto r = numeric::grid_star(c, d, core::ThetaMatrix(1)).value;
    CHECK(std::abs(r.values[7] - oracle::grid_star_at(c, d, 0, line.point(7))) < 1e-12);

    CHECK_THROWS_AS(numeric::grid_star(a, numeric::sample(numeric::Gaussian{{0, 0}, 1}, GridSpec{2, 32, 5}),
                                       core::ThetaMatrix::planar(Rational(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(numeric::grid_star(a, b, core::ThetaMatrix(3)), std::invalid_argument);
}

TEST_CASE("theta = 0 gives the pointwise product") {
    const GridSpec s{2, 64, 9};
    const auto a = numeric::sample(numeric::WindowedWave{{1, 0.5}, 0.5}, s);
    const auto b = numeric::sample(numeric::Hermite{{2, 1}, 1.2}, s);
    const auto r = numeric::grid_star(a, b, core::ThetaMatrix(2));
    GridFunction pointwise(s);
    for (std::size_t i = 0; i < s.size(); ++i) pointwise.values[i] = a.values[i] * b.values[i];
    CHECK(numeric::max_difference(r.value, pointwise) < 1e-10);
    CHECK_FALSE(r.aliasing);
}

TEST_CASE("windowed plane waves follow the exponential law") {
    const GridSpec s{2, 64, 9};
    const numeric::WindowedWave f{{1, 0.5}, 0.5}, g{{-0.5, 1}, 0.5};
    for (double t : {0.5, 1.0, -1.5}) {
        const auto theta = core::ThetaMatrix::planar(Rational(t));
        const auto r = numeric::grid_star(numeric::sample(f, s), numeric::sample(g, s), theta);
        const double err = interior_error(
            r.value, [&](const std::vector<double>& x) { return numeric::windowed_wave_star_exact(f, g, theta, x); },
            s.half_width / 2);
        CHECK(err < 1e-6);
    }
    // The exact reference carries the phase -h theta k / 2 and reduces to the
    // pointwise product at theta = 0.
    const std::vector<double> x0 = {0.3, -0.2};
    const cd plain = numeric::windowed_wave_star_exact(f, g, core::ThetaMatrix(2), x0);
    CHECK(std::abs(plain - std::polar(std::exp(-1.0 * (0.09 + 0.04)), 1 * 0.3 + 0.5 * -0.2 + (-0.5 * 0.3 + 1 * -0.2))) <
          1e-14);
    // Broad windows: the ratio to the pointwise product tends to exp(-(i/2) h theta k).
    const numeric::WindowedWave fb{{1, 0.5}, 1e-6}, gb{{-0.5, 1}, 1e-6};
    const auto theta = core::ThetaMatrix::planar(Rational(1));
    const cd ratio = numeric::windowed_wave_star_exact(fb, gb, theta, {0, 0});
    const double htk = 1 * 1 - 0.5 * -0.5;  // t (h1 k2 - h2 k1)
    CHECK(std::abs(ratio - std::polar(1.0, -htk / 2)) < 1e-5);
}

TEST_CASE("Gaussian products") {
    const auto theta = core::ThetaMatrix::planar(Rational(3, 2));
    const auto p = numeric::gaussian_star_gaussian(Rational(1, 2), Rational(1, 3), Rational(3, 2));
    for (const std::vector<double>& x : {std::vector<double>{0, 0}, {0.4, -1.1}}) {
        const cd exact = numeric::windowed_wave_star_exact({{0, 0}, 0.5}, {{0, 0}, 1.0 / 3}, theta, x);
        const double r2 = x[0] * x[0] + x[1] * x[1];
        CHECK(std::abs(exact - p.factor.get_d() * std::exp(-p.gamma.get_d() * r2)) < 1e-14);
    }
}

TEST_CASE("integral cyclicity and hermiticity") {
    const GridSpec s{2, 64, 9};
    const auto theta = core::ThetaMatrix::planar(Rational(4, 5));
    const std::vector<GridFunction> set = {
        numeric::sample(numeric::Gaussian{{0.3, -0.2}, 1}, s), numeric::sample(numeric::Gaussian{{-1, 0.5}, 0.8}, s),
        numeric::sample(numeric::Hermite{{1, 2}, 1}, s), numeric::sample(numeric::Hermite{{3, 0}, 1.1}, s),
        numeric::sample(numeric::WindowedWave{{1, -1}, 0.6}, s)};
    for (const auto& a : set)
        for (const auto& b : set) {
            const auto ab = numeric::grid_star(a, b, theta).value;
            const auto ba = numeric::grid_star(b, a, theta).value;
            GridFunction pointwise(s);
            for (std::size_t i = 0; i < s.size(); ++i) pointwise.values[i] = a.values[i] * b.values[i];
            CHECK(std::abs(numeric::grid_integral(ab) - numeric::grid_integral(pointwise)) < 1e-8);
            CHECK(std::abs(numeric::grid_integral(ab) - numeric::grid_integral(ba)) < 1e-8);
            const auto rhs = numeric::grid_star(b.conj(), a.conj(), theta).value;
            CHECK(numeric::max_difference(ab.conj(), rhs) < 1e-8);
        }
}

TEST_CASE("grid star against the terminating symbolic expansion") {
    const GridSpec s{2, 64, 9};
    const core::PolyExpr x1 = core::PolyExpr::variable(2, 0), x2 = core::PolyExpr::variable(2, 1);
    const core::PolyExpr q = x1 * x1 * x2 + x2 * core::Scalar(Rational(-1, 2), Rational(1)) + core::PolyExpr::constant(2, 3);
    for (const Rational& t : {Rational(1), Rational(-3, 4)}) {
        const auto pair = numeric::poly_gaussian_pair(q, Rational(1, 2), Rational(2, 3), t);
        const auto r = numeric::grid_star(numeric::sample(pair.left, s), numeric::sample(pair.right, s),
                                          core::ThetaMatrix::planar(t));
        CHECK(numeric::max_difference(r.value, numeric::sample(pair.product, s)) < 1e-6);
    }
}

TEST_CASE("aliasing flag") {
    const GridSpec s{2, 32, 4};
    const auto sharp = numeric::sample(numeric::WindowedWave{{7, 0}, 2}, s);
    const auto smooth = numeric::sample(numeric::Gaussian{{0, 0}, 1}, s);
    CHECK(numeric::grid_star(sharp, smooth, core::ThetaMatrix::planar(Rational(1))).aliasing);
    CHECK(numeric::outer_band_weight(numeric::sample(numeric::Gaussian{{0, 0}, 1}, GridSpec{2, 64, 8})) < 1e-10);
}

TEST_CASE("binary and CSV export") {
    const GridSpec s{2, 8, 2};
    const auto f = numeric::sample(numeric::WindowedWave{{1, 2}, 0.5}, s);
    std::stringstream buf;
    numeric::write_binary(buf, f);
    CHECK(buf.str().size() == 4 + 3 * 4 + 8 + 64 * 16);
    CHECK(buf.str().substr(0, 4) == "MGRD");
    const auto back = numeric::read_binary(buf);
    CHECK(back.spec == s);
    CHECK(numeric::max_difference(back, f) == 0.0);

    std::stringstream bad("MGRX");
    CHECK_THROWS_AS(numeric::read_binary(bad), std::runtime_error);
    std::string truncated = buf.str().substr(0, 40);
    std::stringstream tr(truncated);
    CHECK_THROWS_AS(numeric::read_binary(tr), std::runtime_error);

    std::ostringstream csv;
    numeric::write_csv(csv, f);
    const std::string text = csv.str();
    CHECK(text.rfind("x1,x2,re,im\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 65);
}
