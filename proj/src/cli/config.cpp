#include "moyal/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "moyal/core/scalar.hpp"

namespace moyal::cli {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"star-core", "hopf", "fock", "numeric", "landau", "twoparticle"};
    return names;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view s, std::string_view separators) {
    std::vector<std::string> out;
    std::size_t at = 0;
    while (at <= s.size()) {
        const std::size_t next = std::min(s.find_first_of(separators, at), s.size());
        const std::string_view piece = trim(s.substr(at, next - at));
        if (!piece.empty()) out.emplace_back(piece);
        at = next + 1;
    }
    return out;
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key));
    return out;
}

double parse_real(std::string_view key, std::string_view value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(std::string(value), &used);
        if (used != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key));
    }
}

bool known_suite(const std::string& name) {
    return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

}  // namespace

core::ThetaMatrix parse_theta(std::string_view text) {
    const auto parts = split(text, ", \t");
    try {
        std::vector<core::Rational> entries;
        for (const auto& p : parts) entries.push_back(core::parse_rational(p));
        if (entries.size() == 1) return core::ThetaMatrix::planar(entries[0]);
        const auto dim = static_cast<std::size_t>(std::lround(std::sqrt(double(entries.size()))));
        if (entries.empty() || dim * dim != entries.size())
            throw ConfigError("theta needs one value or n*n matrix entries, got " + std::to_string(entries.size()));
        return core::ThetaMatrix(dim, std::move(entries));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("invalid theta '" + std::string(text) + "': " + e.what());
    }
}

void Config::set(std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "theta") {
        theta = parse_theta(value);
    } else if (key == "b") {
        try {
            b = core::parse_rational(value);
        } catch (const std::exception&) {
            throw ConfigError("invalid value '" + std::string(value) + "' for b");
        }
    } else if (key == "modes") {
        modes_file = std::filesystem::path(std::string(value));
    } else if (key == "grid.n") {
        grid_n = parse_number<std::size_t>(key, value);
    } else if (key == "grid.l") {
        grid_l = parse_real(key, value);
    } else if (key == "suites" || key == "suite") {
        suites = split(value, ", \t");
    } else if (key == "out") {
        output_dir = std::filesystem::path(std::string(value));
    } else if (key == "seed") {
        seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "jobs") {
        jobs = parse_number<unsigned>(key, value);
    } else if (key.substr(0, 10) == "tolerance.") {
        tolerances[std::string(key.substr(10))] = parse_real(key, value);
    } else {
        throw ConfigError("unknown configuration key '" + std::string(key) + "'");
    }
}

void Config::validate() const {
    if (suites.empty()) throw ConfigError("no suites selected");
    for (const auto& s : suites)
        if (!known_suite(s)) throw ConfigError("unknown suite '" + s + "'");
    for (const auto& [s, tol] : tolerances) {
        if (!known_suite(s) || s == "all") throw ConfigError("tolerance override for unknown suite '" + s + "'");
        if (!(tol > 0)) throw ConfigError("tolerance for '" + s + "' must be positive");
    }
    if (grid_n < 2 || (grid_n & (grid_n - 1)) != 0) throw ConfigError("grid.n must be a power of two");
    if (!(grid_l > 0)) throw ConfigError("grid.l must be positive");
    if (jobs == 0) throw ConfigError("jobs must be at least 1");
}

std::vector<std::string> Config::expanded_suites() const {
    std::vector<std::string> out;
    for (const auto& s : suites) {
        const std::vector<std::string> names = s == "all" ? suite_names() : std::vector<std::string>{s};
        for (const auto& n : names)
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    return out;
}

void load_config(std::istream& in, Config& config) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(number) + ": expected key = value");
        try {
            config.set(view.substr(0, eq), view.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(number) + ": " + e.what());
        }
    }
}

void load_config_file(const std::filesystem::path& path, Config& config) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    load_config(in, config);
}

}  // namespace moyal::cli
