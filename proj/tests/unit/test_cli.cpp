#include <doctest.h>

#include <json.hpp>
#include <random>
#include <sstream>

#include "moyal/cli/commands.hpp"
#include "moyal/cli/config.hpp"
#include "moyal/cli/expression.hpp"
#include "moyal/cli/suites.hpp"
#include "moyal/core/random.hpp"

using namespace moyal;
using cli::ParseError;
using core::PolyExpr;
using core::Rational;
using core::Scalar;

namespace {

std::size_t error_position(const std::string& text, const cli::ParseOptions& options = {}) {
    try {
        cli::parse_expression(text, options);
    } catch (const ParseError& e) {
        return e.position();
    }
    return 0;
}

}  // namespace

TEST_CASE("expression parsing") {
    const PolyExpr x1 = PolyExpr::variable(2, 0), x2 = PolyExpr::variable(2, 1);
    CHECK(cli::parse_expression("x1*x2") == x1 * x2);
    const PolyExpr half_i = cli::parse_expression("(1/2)*i*x1^2");
    CHECK(half_i.nvars() == 1);
    CHECK(half_i.coefficient({2}) == Scalar(Rational(0), Rational(1, 2)));
    CHECK(cli::parse_expression("-x1^2 + 2*(x1 - x2)^2 - 0.25", {2}) ==
          x1 * x1 + x1 * x2 * Scalar(-4) + x2 * x2 * Scalar(2) + PolyExpr::constant(2, Scalar(Rational(-1, 4))));
    CHECK(cli::parse_expression("x1 / 2 / i", {1}) == PolyExpr::variable(1, 0) * Scalar(Rational(0), Rational(-1, 2)));
    CHECK(cli::parse_expression("3", {2}) == PolyExpr::constant(2, Scalar(3)));

    // x<a>_<p> is coordinate a of particle p.
    CHECK(cli::parse_expression("x1_2") == PolyExpr::variable(3, 2));
    CHECK(cli::parse_expression("x2_2*x1_1") == PolyExpr::variable(4, 3) * PolyExpr::variable(4, 0));
    CHECK(cli::parse_expression("x3_2", {0, 3}) == PolyExpr::variable(6, 5));
}

TEST_CASE("expression errors carry position and expectation") {
    CHECK(error_position("x1 +") == 5);
    try {
        cli::parse_expression("x1 +");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.expected() == "operand");
    }
    CHECK(error_position("x0") == 1);
    CHECK(error_position("2*x3", {2}) == 3);
    CHECK(error_position("x3_1") == 1);
    CHECK(error_position("x1^-1") == 4);
    CHECK(error_position("x1^1.5") == 4);
    CHECK(error_position("x1^x2") == 4);
    CHECK(error_position("x1 / x2") == 6);
    CHECK(error_position("x1 / 0") == 6);
    CHECK(error_position("(x1 + 1") == 8);
    CHECK(error_position("x1 $ 2") == 4);
    CHECK(error_position("x1 x2") == 4);
    CHECK(error_position("y") == 1);
    CHECK(error_position("x") == 2);
    CHECK(error_position("") == 1);
}

TEST_CASE("canonical printing round-trips") {
    CHECK(cli::print_expression(PolyExpr(2)) == "0");
    CHECK(cli::print_expression(cli::parse_expression("1/2*i + x2*x1")) == "x1*x2 + (1/2)*i");
    CHECK(cli::print_expression(cli::parse_expression("x2 + x1^2 - 3 - x1*x2^2")) == "-x1*x2^2 + x1^2 + x2 - 3");
    CHECK(cli::print_expression(cli::parse_expression("(1 + 2*i)*x1 - i*x2 - (1/3)*i")) ==
          "(1 + 2*i)*x1 - i*x2 - (1/3)*i");
    CHECK(cli::print_expression(cli::parse_expression("(2/3 - i)*x1")) == "(2/3 - i)*x1");

    const std::vector<std::string> corpus = {
        "x1*x2", "(1/2)*i*x1^2", "x1^3 - x2^3 + i", "-(x1 + x2)^4 / 6", "x1_2*x2_1 - 7/9", "((x1))", "0*x1 + 5",
        "i*i", "x3^2*x1 - (3/4 + 5/7*i)*x2"};
    for (const auto& text : corpus) {
        const std::string once = cli::print_expression(cli::parse_expression(text));
        CHECK(cli::print_expression(cli::parse_expression(once)) == once);
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const PolyExpr p = core::random_polynomial(rng, 3, 5, 6);
        const std::string text = cli::print_expression(p);
        CHECK(cli::parse_expression(text, {3}) == p);
        CHECK(cli::print_expression(cli::parse_expression(text)) == text);
    }
}

TEST_CASE("star and weyl commands") {
    const auto planar = core::ThetaMatrix::planar(Rational(1));
    CHECK(cli::star_command("x1", "x2", planar) == "x1*x2 + (1/2)*i");
    CHECK(cli::star_command("1", "x1^3", planar) == "x1^3");
    CHECK(cli::star_command("x1", "x1", planar) == "x1^2");
    CHECK(cli::star_command("x2", "x1", planar) == "x1*x2 - (1/2)*i");
    CHECK_THROWS_AS(cli::star_command("x3", "x1", planar), std::invalid_argument);
    CHECK_THROWS_AS(cli::star_command("x1 +", "x1", planar), ParseError);
    CHECK(cli::weyl_command("x1*x2", planar) == "star(x1,x2) - (1/2)*i");
    CHECK(cli::weyl_command("0", planar) == "0");
    CHECK(cli::weyl_command("x2^2 + 4", core::ThetaMatrix(2)) == "star(x2,x2) + 4");
}

TEST_CASE("configuration") {
    cli::Config c;
    std::istringstream in(
        "# sample\n theta = 0, 1/2, -1/2, 0\nb=2\ngrid.n = 32\ngrid.l=6.5\nsuites = landau, fock\nseed = 9\n"
        "tolerance.numeric = 1e-7\njobs = 2\n");
    cli::load_config(in, c);
    CHECK(c.theta == core::ThetaMatrix::planar(Rational(1, 2)));
    CHECK(c.b == 2);
    CHECK(c.grid_n == 32);
    CHECK(c.grid_l == 6.5);
    CHECK(c.suites == std::vector<std::string>{"landau", "fock"});
    CHECK(c.seed == 9);
    CHECK(c.jobs == 2);
    CHECK(c.tolerances.at("numeric") == 1e-7);
    CHECK_NOTHROW(c.validate());

    CHECK(cli::parse_theta("3/4") == core::ThetaMatrix::planar(Rational(3, 4)));
    CHECK(cli::parse_theta("0 1 2 -1 0 3 -2 -3 0").dim() == 3);
    CHECK_THROWS_AS(cli::parse_theta("0 1 1 0"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_theta("1 2 3"), cli::ConfigError);

    std::istringstream unknown("colour = red\n");
    CHECK_THROWS_AS(cli::load_config(unknown, c), cli::ConfigError);
    std::istringstream missing("theta 1\n");
    CHECK_THROWS_AS(cli::load_config(missing, c), cli::ConfigError);
    CHECK_THROWS_AS(c.set("seed", "-1"), cli::ConfigError);

    cli::Config bad;
    bad.suites = {"nope"};
    CHECK_THROWS_AS(bad.validate(), cli::ConfigError);
    bad.suites = {"all"};
    bad.tolerances["numeric"] = 0;
    CHECK_THROWS_AS(bad.validate(), cli::ConfigError);
    bad.tolerances.clear();
    bad.grid_n = 48;
    CHECK_THROWS_AS(bad.validate(), cli::ConfigError);
    CHECK_THROWS_AS(cli::load_config_file("/nonexistent/moyal.cfg", bad), cli::ConfigError);

    cli::Config all;
    all.suites = {"landau", "all"};
    CHECK(all.expanded_suites() ==
          std::vector<std::string>{"landau", "star-core", "hopf", "fock", "numeric", "twoparticle"});
}

TEST_CASE("suites and reports") {
    cli::Config c;
    c.theta = core::ThetaMatrix::planar(Rational(0));
    const cli::Report flat = cli::run_suite("star-core", c);
    CHECK(flat.passed());
    CHECK(flat.checks.size() == 5);

    c.theta = core::ThetaMatrix::planar(Rational(1, 3));
    c.b = Rational(1, 2);
    const cli::Report landau = cli::run_suite("landau", c);
    REQUIRE(!landau.checks.empty());
    CHECK(landau.checks.front().id == "landau.closed-form");
    CHECK(landau.checks.front().passed);

    // Same config, same residuals.
    c.seed = 5;
    const cli::Report first = cli::run_suite("star-core", c);
    const cli::Report second = cli::run_suite("star-core", c);
    for (std::size_t k = 0; k < first.checks.size(); ++k) CHECK(first.checks[k].residual == second.checks[k].residual);

    CHECK_THROWS_AS(cli::run_suite("nope", c), cli::ConfigError);
    c.modes_file = "/nonexistent/modes.txt";
    c.suites = {"hopf"};
    CHECK_THROWS_AS(cli::run_suites(c), cli::ConfigError);
    c.modes_file.reset();

    c.suites = {"star-core", "landau"};
    c.jobs = 2;
    const cli::Report parallel = cli::run_suites(c);
    c.jobs = 1;
    const cli::Report serial = cli::run_suites(c);
    REQUIRE(parallel.checks.size() == serial.checks.size());
    for (std::size_t k = 0; k < serial.checks.size(); ++k) CHECK(parallel.checks[k].id == serial.checks[k].id);

    const auto doc = nlohmann::json::parse(cli::to_json(serial));
    CHECK(doc["suite"] == "all");
    CHECK(doc["seed"] == 5);
    REQUIRE(doc["checks"].size() == serial.checks.size());
    for (const auto& check : doc["checks"]) {
        CHECK(check.contains("id"));
        CHECK(check.contains("description"));
        CHECK(!check["anchor"].get<std::string>().empty());
        CHECK((check["status"] == "pass" || check["status"] == "fail"));
        CHECK(check.contains("residual"));
        CHECK(check.contains("tolerance"));
        CHECK(check.contains("seconds"));
    }
    std::ostringstream text;
    cli::write_text(text, serial);
    CHECK(text.str().find("PASS star-core.commutator") != std::string::npos);

    // Tolerance overrides apply to floating-point checks only.
    cli::Config tight;
    tight.suites = {"landau"};
    tight.tolerances["landau"] = 1e-30;
    const cli::Report t = cli::run_suites(tight);
    for (const auto& check : t.checks)
        CHECK(check.tolerance == (check.id == "landau.spectrum-scaling" ? 1e-30 : 0.0));
}
