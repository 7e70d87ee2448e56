#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "moyal/core/poly.hpp"

namespace moyal::cli {

/// Syntax or semantic error in a polynomial expression. `position` is the
/// 1-based column of the offending character (length + 1 at end of input).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::string expected, const std::string& message);
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

struct ParseOptions {
    /// Number of variables of the result; 0 infers the highest index used
    /// (at least 1). Variables beyond a fixed count are rejected.
    std::size_t nvars = 0;
    /// Coordinates per particle for the alias x<a>_<p> = coordinate a of particle p.
    std::size_t coordinates = 2;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*       division by nonzero constants only
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := number | 'i' | variable | '(' expr ')'
///   variable := 'x' integer ('_' integer)?
/// Numbers are integers or finite decimals; products are commutative.
core::PolyExpr parse_expression(std::string_view text, const ParseOptions& options = {});

/// Canonical text: terms by total degree descending, then exponent vectors
/// descending; coefficients 1 are elided, fractions are parenthesized.
std::string print_expression(const core::PolyExpr& p);

}  // namespace moyal::cli
