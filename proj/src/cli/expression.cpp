#include "moyal/cli/expression.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "moyal/core/scalar.hpp"

namespace moyal::cli {

using core::PolyExpr;
using core::Rational;
using core::Scalar;

ParseError::ParseError(std::size_t position, std::string expected, const std::string& message)
    : std::runtime_error("position " + std::to_string(position) + ": " + message + " (expected " + expected + ")"),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

enum class Kind { Number, Imaginary, Variable, Operator, Open, Close, End };

struct Token {
    Kind kind;
    std::size_t position;  // 1-based
    std::string text;
    std::size_t index = 0;  // variable index, 0-based
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
public:
    Lexer(std::string_view text, std::size_t coordinates) : text_(text), coordinates_(coordinates) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
            const std::size_t pos = at_ + 1;
            if (at_ == text_.size()) {
                out.push_back({Kind::End, pos, ""});
                return out;
            }
            const char c = text_[at_];
            if (is_digit(c) || c == '.') {
                out.push_back({Kind::Number, pos, number()});
            } else if (c == 'i') {
                ++at_;
                out.push_back({Kind::Imaginary, pos, "i"});
            } else if (c == 'x') {
                out.push_back(variable(pos));
            } else if (std::string_view("+-*/^").find(c) != std::string_view::npos) {
                ++at_;
                out.push_back({Kind::Operator, pos, std::string(1, c)});
            } else if (c == '(') {
                ++at_;
                out.push_back({Kind::Open, pos, "("});
            } else if (c == ')') {
                ++at_;
                out.push_back({Kind::Close, pos, ")"});
            } else {
                throw ParseError(pos, "operand or operator", std::string("unexpected character '") + c + "'");
            }
        }
    }

private:
    std::string digits() {
        const std::size_t start = at_;
        while (at_ < text_.size() && is_digit(text_[at_])) ++at_;
        return std::string(text_.substr(start, at_ - start));
    }

    std::string number() {
        const std::size_t start = at_;
        std::string whole = digits();
        if (at_ < text_.size() && text_[at_] == '.') {
            ++at_;
            const std::string frac = digits();
            if (whole.empty() && frac.empty()) throw ParseError(start + 1, "number", "lone decimal point");
        }
        return std::string(text_.substr(start, at_ - start));
    }

    Token variable(std::size_t pos) {
        ++at_;
        const std::string first = digits();
        if (first.empty()) throw ParseError(at_ + 1, "variable index", "'x' must be followed by an index");
        std::size_t index = std::stoul(first);
        if (at_ < text_.size() && text_[at_] == '_') {
            ++at_;
            const std::string particle = digits();
            if (particle.empty()) throw ParseError(at_ + 1, "particle index", "'_' must be followed by an index");
            const std::size_t a = index, p = std::stoul(particle);
            if (a == 0 || a > coordinates_ || p == 0)
                throw ParseError(pos, "known variable",
                                 "unknown variable x" + first + "_" + particle);
            return {Kind::Variable, pos, std::string(text_.substr(pos - 1, at_ - pos + 1)), (p - 1) * coordinates_ + a - 1};
        }
        if (index == 0) throw ParseError(pos, "known variable", "unknown variable x0; indices start at 1");
        return {Kind::Variable, pos, "x" + first, index - 1};
    }

    std::string_view text_;
    std::size_t coordinates_;
    std::size_t at_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t nvars) : tokens_(std::move(tokens)), nvars_(nvars) {}

    PolyExpr run() {
        PolyExpr out = expr();
        if (peek().kind != Kind::End) throw ParseError(peek().position, "operator or end of input", "unexpected '" + peek().text + "'");
        return out;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    bool is_op(char c) const { return peek().kind == Kind::Operator && peek().text[0] == c; }

    PolyExpr expr() {
        PolyExpr out = term();
        while (is_op('+') || is_op('-')) {
            const bool minus = is_op('-');
            ++at_;
            const PolyExpr rhs = term();
            if (minus) out -= rhs;
            else out += rhs;
        }
        return out;
    }

    PolyExpr term() {
        PolyExpr out = unary();
        while (is_op('*') || is_op('/')) {
            const bool divide = is_op('/');
            ++at_;
            const std::size_t pos = peek().position;
            const PolyExpr rhs = unary();
            if (!divide) {
                out = out * rhs;
                continue;
            }
            if (rhs.degree() != 0 || rhs.is_zero())
                throw ParseError(pos, "nonzero constant", "division by a non-constant or zero expression");
            const Scalar c = rhs.coefficient(core::Exponents(nvars_, 0));
            out *= Scalar(1) / c;
        }
        return out;
    }

    PolyExpr unary() {
        if (is_op('-')) {
            ++at_;
            return -unary();
        }
        if (is_op('+')) {
            ++at_;
            return unary();
        }
        return power();
    }

    PolyExpr power() {
        PolyExpr base = atom();
        if (!is_op('^')) return base;
        ++at_;
        const Token& t = peek();
        if (t.kind != Kind::Number || t.text.find('.') != std::string::npos)
            throw ParseError(t.position, "nonnegative integer exponent", "exponent must be a nonnegative integer");
        ++at_;
        return core::pow(base, static_cast<unsigned>(std::stoul(t.text)));
    }

    PolyExpr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Kind::Number:
                ++at_;
                return PolyExpr::constant(nvars_, Scalar(core::parse_rational(t.text)));
            case Kind::Imaginary:
                ++at_;
                return PolyExpr::constant(nvars_, Scalar::i());
            case Kind::Variable:
                if (t.index >= nvars_)
                    throw ParseError(t.position, "known variable",
                                     "unknown variable " + t.text + " (expression has " + std::to_string(nvars_) +
                                         " variables)");
                ++at_;
                return PolyExpr::variable(nvars_, t.index);
            case Kind::Open: {
                ++at_;
                PolyExpr inner = expr();
                if (peek().kind != Kind::Close) throw ParseError(peek().position, "')'", "unbalanced parenthesis");
                ++at_;
                return inner;
            }
            default:
                throw ParseError(t.position, "operand",
                                 t.kind == Kind::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t nvars_;
    std::size_t at_ = 0;
};

std::string monomial_text(const core::Exponents& e) {
    std::string out;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(v + 1);
        if (e[v] > 1) out += '^' + std::to_string(e[v]);
    }
    return out;
}

std::string rational_text(const Rational& r, bool wrap) {
    if (r.get_den() == 1) return r.get_num().get_str();
    const std::string s = r.get_num().get_str() + "/" + r.get_den().get_str();
    return wrap ? "(" + s + ")" : s;
}

// Coefficient text for a term whose sign has been pulled out; empty means 1.
std::string coefficient_text(const Scalar& c, bool has_monomial, bool& negative) {
    const int re = sgn(c.re()), im = sgn(c.im());
    if (im == 0) {
        negative = re < 0;
        const Rational a = abs(c.re());
        if (a == 1 && has_monomial) return "";
        return rational_text(a, true);
    }
    if (re == 0) {
        negative = im < 0;
        const Rational a = abs(c.im());
        return a == 1 ? "i" : rational_text(a, true) + "*i";
    }
    negative = false;
    const Rational b = abs(c.im());
    const std::string imag = b == 1 ? "i" : rational_text(b, true) + "*i";
    return "(" + rational_text(c.re(), false) + (im < 0 ? " - " : " + ") + imag + ")";
}

}  // namespace

PolyExpr parse_expression(std::string_view text, const ParseOptions& options) {
    std::vector<Token> tokens = Lexer(text, options.coordinates).run();
    std::size_t nvars = options.nvars;
    if (nvars == 0) {
        nvars = 1;
        for (const auto& t : tokens)
            if (t.kind == Kind::Variable) nvars = std::max(nvars, t.index + 1);
    }
    return Parser(std::move(tokens), nvars).run();
}

std::string print_expression(const PolyExpr& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<core::Exponents, Scalar>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const unsigned da = core::total_degree(a.first), db = core::total_degree(b.first);
        return da != db ? da > db : a.first > b.first;
    });
    std::string out;
    for (const auto& [e, c] : terms) {
        const std::string mono = monomial_text(e);
        bool negative = false;
        const std::string coeff = coefficient_text(c, !mono.empty(), negative);
        std::string body = coeff;
        if (!mono.empty()) body += (body.empty() ? "" : "*") + mono;
        if (out.empty()) out = (negative ? "-" : "") + body;
        else out += (negative ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace moyal::cli
