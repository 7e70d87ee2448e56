#pragma once

#include <string>
#include <string_view>

#include "moyal/cli/expression.hpp"
#include "moyal/core/theta.hpp"

namespace moyal::cli {

/// Parses both operands on a common variable count, applies the Moyal
/// product and prints the canonical result. Throws ParseError, or
/// std::invalid_argument when theta is smaller than the variable count.
std::string star_command(std::string_view a, std::string_view b, const core::ThetaMatrix& theta,
                         std::size_t coordinates = 2);

/// Rewrites an ordinary polynomial over ordered star-monomials and prints
/// it as a sum of terms c*star(x_h1,...,x_hk), indices ascending.
std::string weyl_command(std::string_view expr, const core::ThetaMatrix& theta, std::size_t coordinates = 2);

}  // namespace moyal::cli
