#pragma once

#include <string>

#include "moyal/cli/config.hpp"
#include "moyal/cli/report.hpp"
#include "moyal/core/theta.hpp"
#include "moyal/hopf/modes.hpp"

namespace moyal::cli {

/// Runs one named suite ("all" runs every suite in order). Throws
/// ConfigError for unknown names or an unreadable mode file.
Report run_suite(const std::string& name, const Config& config);

/// Runs config.expanded_suites(), in parallel when config.jobs > 1, and
/// concatenates the checks in suite order under the name "all" (or the
/// single suite name).
Report run_suites(const Config& config);

/// Deformation matrix of dimension m derived from the configured one: the
/// configured matrix if it has that size, otherwise theta^{ab} = t/(b - a)
/// for a < b with t the configured theta^{12}.
core::ThetaMatrix theta_for(const Config& config, std::size_t m);

/// Mode file from the config, or four planar momenta.
hopf::ModeBasis config_modes(const Config& config);

}  // namespace moyal::cli
