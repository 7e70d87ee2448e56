#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "moyal/cli/commands.hpp"
#include "moyal/cli/config.hpp"
#include "moyal/cli/suites.hpp"
#include "moyal/dynamics/spectrum.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunFlags {
    std::string config, theta, modes, out, b;
    std::vector<std::string> suites;
    std::size_t grid_n = 0;
    double grid_l = 0;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
};

int run(const RunFlags& f, const CLI::App& cmd) {
    using moyal::cli::Config;
    Config config;
    if (!f.config.empty()) moyal::cli::load_config_file(f.config, config);
    // Flags override the file.
    if (cmd.count("--theta")) config.set("theta", f.theta);
    if (cmd.count("--b")) config.set("b", f.b);
    if (cmd.count("--modes")) config.set("modes", f.modes);
    if (cmd.count("--grid-n")) config.grid_n = f.grid_n;
    if (cmd.count("--grid-l")) config.grid_l = f.grid_l;
    if (cmd.count("--suite")) config.suites = f.suites;
    if (cmd.count("--out")) config.output_dir = f.out;
    if (cmd.count("--seed")) config.seed = f.seed;
    if (cmd.count("--jobs")) config.jobs = f.jobs;
    config.validate();

    const auto report = moyal::cli::run_suites(config);
    moyal::cli::write_text(std::cout, report);
    if (config.output_dir) {
        std::filesystem::create_directories(*config.output_dir);
        std::ofstream json(*config.output_dir / "report.json");
        std::ofstream text(*config.output_dir / "report.txt");
        if (!json || !text) throw moyal::cli::ConfigError("cannot write to " + config.output_dir->string());
        json << moyal::cli::to_json(report) << '\n';
        moyal::cli::write_text(text, report);
    }
    return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moyal star-product toolkit: symbolic products, verification suites and spectra"};
    app.require_subcommand(1);

    RunFlags flags;
    auto* run_cmd = app.add_subcommand("run", "run verification suites and write a report");
    run_cmd->add_option("--config", flags.config, "key = value configuration file");
    run_cmd->add_option("--suite", flags.suites, "suite names (star-core, hopf, fock, numeric, landau, twoparticle, all)")
        ->delimiter(',');
    run_cmd->add_option("--theta", flags.theta, "planar theta^{12} or row-major matrix entries");
    run_cmd->add_option("--b", flags.b, "magnetic field strength for the Landau suites");
    run_cmd->add_option("--modes", flags.modes, "mode file, one momentum per line");
    run_cmd->add_option("--grid-n", flags.grid_n, "grid points per axis (power of two)");
    run_cmd->add_option("--grid-l", flags.grid_l, "grid half width L");
    run_cmd->add_option("--out", flags.out, "directory for report.json and report.txt");
    run_cmd->add_option("--seed", flags.seed, "seed for randomized identity checks");
    run_cmd->add_option("--jobs", flags.jobs, "suites run in parallel");

    std::string lhs, rhs, expr, theta_text = "1";
    auto* star_cmd = app.add_subcommand("star", "print the Moyal product of two polynomials");
    star_cmd->add_option("a", lhs, "left operand")->required();
    star_cmd->add_option("b", rhs, "right operand")->required();
    star_cmd->add_option("--theta", theta_text, "planar theta^{12} or row-major matrix entries")->capture_default_str();

    auto* weyl_cmd = app.add_subcommand("weyl", "expand a polynomial over ordered star-monomials");
    weyl_cmd->add_option("expr", expr, "polynomial")->required();
    weyl_cmd->add_option("--theta", theta_text, "planar theta^{12} or row-major matrix entries")->capture_default_str();

    std::string b_text = "1", spec_theta = "0", csv_path;
    std::size_t basis = 20;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Landau spectrum of the deformed operator as CSV");
    spectrum_cmd->add_option("--b", b_text, "field strength (> 0)")->capture_default_str();
    spectrum_cmd->add_option("--theta", spec_theta, "planar theta^{12}")->capture_default_str();
    spectrum_cmd->add_option("--basis", basis, "oscillator quanta per axis")->capture_default_str();
    spectrum_cmd->add_option("--out", csv_path, "CSV file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*run_cmd) return run(flags, *run_cmd);
        if (*star_cmd) {
            std::cout << moyal::cli::star_command(lhs, rhs, moyal::cli::parse_theta(theta_text)) << '\n';
            return kPass;
        }
        if (*weyl_cmd) {
            std::cout << moyal::cli::weyl_command(expr, moyal::cli::parse_theta(theta_text)) << '\n';
            return kPass;
        }
        if (*spectrum_cmd) {
            const moyal::dynamics::LandauParams p{moyal::core::parse_rational(b_text),
                                                  moyal::core::parse_rational(spec_theta)};
            const auto spectrum = moyal::dynamics::landau_spectrum(p, basis);
            if (csv_path.empty()) {
                moyal::dynamics::write_spectrum_csv(std::cout, spectrum);
            } else {
                std::ofstream out(csv_path);
                if (!out) throw moyal::cli::ConfigError("cannot write " + csv_path);
                moyal::dynamics::write_spectrum_csv(out, spectrum);
            }
            return kPass;
        }
    } catch (const moyal::cli::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const moyal::cli::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
