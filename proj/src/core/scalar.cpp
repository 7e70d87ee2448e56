#include "moyal/core/scalar.hpp"

#include <stdexcept>

namespace moyal::core {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    std::string body = s.substr(pos);
    Rational value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational literal '" + s + "'");
        mpz_class d(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        value = Rational(mpz_class(num), d);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
            throw std::invalid_argument("malformed decimal literal '" + s + "'");
        mpz_class scale = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
        mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(ip);
        mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(fp);
        value = Rational(whole * scale + frac, scale);
    } else {
        if (!all_digits(body)) throw std::invalid_argument("malformed rational literal '" + s + "'");
        value = Rational(mpz_class(body));
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Scalar::to_string() const {
    std::string out = rational_to_string(re_);
    if (sgn(im_) < 0)
        out += "-" + rational_to_string(Rational(-im_));
    else
        out += "+" + rational_to_string(im_);
    return out + "*i";
}

Scalar Scalar::parse(std::string_view text) {
    std::string s = trim(text);
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        std::string body = s.substr(0, s.size() - 2);
        // split at the last sign that is not the leading one
        for (std::size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' || body[k] == '-') {
                Rational re = parse_rational(body.substr(0, k));
                Rational im = parse_rational(body.substr(k));
                return {re, im};
            }
        }
        return {Rational(0), parse_rational(body)};
    }
    return Scalar(parse_rational(s));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    Rational den = o.re_ * o.re_ + o.im_ * o.im_;
    Rational re = (re_ * o.re_ + im_ * o.im_) / den;
    Rational im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar pow(const Scalar& base, unsigned exponent) {
    Scalar result(1);
    Scalar b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

}  // namespace moyal::core
