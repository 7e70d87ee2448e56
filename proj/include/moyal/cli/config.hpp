#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moyal/core/theta.hpp"

namespace moyal::cli {

/// Bad configuration value, unknown key or unreadable file.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Known suite names in execution order; "all" expands to this list.
const std::vector<std::string>& suite_names();

struct Config {
    /// Planar t (theta^{12} = t) or a full antisymmetric matrix.
    core::ThetaMatrix theta = core::ThetaMatrix::planar(core::Rational(1, 3));
    /// Field strength of the Landau suites.
    core::Rational b{1, 2};
    std::optional<std::filesystem::path> modes_file;
    std::size_t grid_n = 64;
    double grid_l = 9;
    std::vector<std::string> suites = {"all"};
    std::optional<std::filesystem::path> output_dir;
    /// Replaces the floating-point tolerances of every check in a suite.
    std::map<std::string, double> tolerances;
    std::uint64_t seed = 0;
    unsigned jobs = 1;

    /// Applies one key/value pair. Keys: theta, b, modes, grid.n, grid.l,
    /// suites, out, seed, jobs, tolerance.<suite>. Throws ConfigError.
    void set(std::string_view key, std::string_view value);
    /// Throws ConfigError when an invariant is violated.
    void validate() const;
    /// Suite list with "all" expanded and duplicates removed.
    std::vector<std::string> expanded_suites() const;
};

/// "t" for a planar matrix or n*n comma/space separated row-major entries.
core::ThetaMatrix parse_theta(std::string_view text);

/// Reads "key = value" lines; blank lines and '#' comments are skipped.
/// Later keys override earlier ones.
void load_config(std::istream& in, Config& config);
void load_config_file(const std::filesystem::path& path, Config& config);

}  // namespace moyal::cli
