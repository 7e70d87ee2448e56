#include "moyal/cli/commands.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "moyal/core/star.hpp"

namespace moyal::cli {

namespace {

core::PolyExpr parse_for(std::string_view text, const core::ThetaMatrix& theta, std::size_t coordinates) {
    const std::size_t needed = parse_expression(text, {0, coordinates}).nvars();
    if (needed > theta.dim())
        throw std::invalid_argument("expression uses " + std::to_string(needed) + " variables but theta is " +
                                    std::to_string(theta.dim()) + "x" + std::to_string(theta.dim()));
    return parse_expression(text, {theta.dim(), coordinates});
}

}  // namespace

std::string star_command(std::string_view a, std::string_view b, const core::ThetaMatrix& theta,
                         std::size_t coordinates) {
    return print_expression(core::moyal_star(parse_for(a, theta, coordinates), parse_for(b, theta, coordinates), theta));
}

std::string weyl_command(std::string_view expr, const core::ThetaMatrix& theta, std::size_t coordinates) {
    const core::StarPolyCoeffs coeffs = core::weyl_normal_form(parse_for(expr, theta, coordinates), theta);
    if (coeffs.terms.empty()) return "0";
    // Longest sequences first, matching the polynomial printer.
    std::vector<std::pair<std::vector<std::size_t>, core::Scalar>> terms(coeffs.terms.begin(), coeffs.terms.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first.size() > y.first.size(); });
    std::string out;
    for (const auto& [seq, c] : terms) {
        std::string word;
        for (std::size_t h : seq) word += (word.empty() ? "" : ",") + std::string("x") + std::to_string(h + 1);
        if (!word.empty()) word = "star(" + word + ")";
        // Reuse the scalar formatting of the polynomial printer on c * t.
        std::string coeff = print_expression(core::PolyExpr::constant(1, c));
        bool negative = coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        std::string body;
        if (word.empty()) body = coeff;
        else if (coeff == "1") body = word;
        else body = coeff + "*" + word;
        if (out.empty()) out = (negative ? "-" : "") + body;
        else out += (negative ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace moyal::cli
