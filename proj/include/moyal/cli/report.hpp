#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace moyal::cli {

struct Check {
    std::string id;
    std::string description;
    /// Identity being verified, or "plumbing" for infrastructure checks.
    std::string anchor;
    bool passed = false;
    double residual = 0;
    /// Exact checks use tolerance 0 and count mismatching terms as residual.
    double tolerance = 0;
    double seconds = 0;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const;
    std::size_t failures() const;
};

/// Indented JSON document.
std::string to_json(const Report& report);
/// One line per check plus a summary line.
void write_text(std::ostream& out, const Report& report);

}  // namespace moyal::cli
