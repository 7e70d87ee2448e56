#pragma once

#include <complex>
#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace moyal::core {

using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal ("0.25") into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, always with an explicit denominator.
std::string rational_to_string(const Rational& r);

/// Exact complex number with rational real and imaginary parts.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Scalar conj() const { return {re_, -im_}; }
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Serialized as "p/q+r/s*i" (the imaginary sign folds into the operator).
    std::string to_string() const;
    /// Inverse of to_string; also accepts a bare rational.
    static Scalar parse(std::string_view text);

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return {-re_, -im_}; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Exact power of a scalar with nonnegative exponent.
Scalar pow(const Scalar& base, unsigned exponent);

}  // namespace moyal::core
