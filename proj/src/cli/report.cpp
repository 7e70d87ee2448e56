#include "moyal/cli/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace moyal::cli {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    return std::size_t(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::string to_json(const Report& report) {
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite;
    doc["seed"] = report.seed;
    doc["passed"] = report.passed();
    doc["seconds"] = report.seconds;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        doc["checks"].push_back({{"id", c.id},
                                 {"description", c.description},
                                 {"anchor", c.anchor},
                                 {"status", c.passed ? "pass" : "fail"},
                                 {"residual", c.residual},
                                 {"tolerance", c.tolerance},
                                 {"seconds", c.seconds}});
    }
    return doc.dump(2);
}

void write_text(std::ostream& out, const Report& report) {
    char line[64];
    for (const auto& c : report.checks) {
        std::snprintf(line, sizeof line, "%.3e <= %.1e  %7.3fs", c.residual, c.tolerance, c.seconds);
        out << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << line << "  " << c.description << '\n';
    }
    std::snprintf(line, sizeof line, "%.2fs", report.seconds);
    out << report.suite << ": " << report.checks.size() - report.failures() << '/' << report.checks.size()
        << " checks passed, seed " << report.seed << ", " << line << '\n';
}

}  // namespace moyal::cli
