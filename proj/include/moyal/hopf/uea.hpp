#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "moyal/core/scalar.hpp"
#include "moyal/core/theta.hpp"

namespace moyal::hopf {

using core::Rational;
using core::Scalar;

/// Generators of the Euclidean Lie algebra iso(m): rotations M_ab (a < b,
/// lexicographic) get ids 0..R-1, translations P_a get ids R..R+m-1.
///
///   [P_a, P_b]     = 0
///   [M_ab, P_c]    = -i (delta_ac P_b - delta_bc P_a)
///   [M_ab, M_cd]   =  i (delta_bc M_ad - delta_ac M_bd - delta_bd M_ac + delta_ad M_bc)
class IsoAlgebra {
public:
    explicit IsoAlgebra(std::size_t m);

    std::size_t dim() const { return m_; }
    std::size_t generator_count() const { return rotations_ + m_; }
    std::size_t rotation_count() const { return rotations_; }

    unsigned momentum(std::size_t a) const;
    /// Id of M_ab for a < b.
    unsigned rotation(std::size_t a, std::size_t b) const;
    bool is_momentum(unsigned g) const { return g >= rotations_; }

    /// [g1, g2] as a combination of generators.
    std::vector<std::pair<unsigned, Scalar>> bracket(unsigned g1, unsigned g2) const;

    friend bool operator==(const IsoAlgebra&, const IsoAlgebra&) = default;

private:
    // M_xy for arbitrary x != y, with sign.
    void add_rotation(std::vector<std::pair<unsigned, Scalar>>& out, std::size_t x, std::size_t y, const Scalar& c) const;

    std::size_t m_;
    std::size_t rotations_;
    std::vector<std::pair<std::size_t, std::size_t>> rotation_index_;
};

/// Generator word; stored words are nondecreasing (PBW order: rotations
/// first, then translations).
using Word = std::vector<unsigned>;

/// Element of the universal enveloping algebra U(iso(m)) in PBW normal form.
class UEAElement {
public:
    using Terms = std::map<Word, Scalar>;

    explicit UEAElement(std::size_t m) : algebra_(m) {}

    static UEAElement one(std::size_t m);
    static UEAElement generator(std::size_t m, unsigned g);
    static UEAElement momentum(std::size_t m, std::size_t a);
    /// M_omega = omega^{ab} M_ab summed over all a, b (omega antisymmetric).
    static UEAElement rotation(std::size_t m, const core::ThetaMatrix& omega);
    /// Arbitrary word, normal ordered on construction.
    static UEAElement word(std::size_t m, const Word& w, const Scalar& c = Scalar(1));

    const IsoAlgebra& algebra() const { return algebra_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * w for a word already in PBW order.
    void add_ordered(const Word& w, const Scalar& c);

    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    UEAElement& operator*=(const Scalar& c);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(UEAElement a, const Scalar& c) { return a *= c; }
    friend UEAElement operator*(const Scalar& c, UEAElement a) { return a *= c; }
    /// Algebra product, re-normalized through the structure constants.
    friend UEAElement operator*(const UEAElement& a, const UEAElement& b);

    friend bool operator==(const UEAElement&, const UEAElement&) = default;

private:
    IsoAlgebra algebra_;
    Terms terms_;
};

/// Normal orders an arbitrary word.
UEAElement::Terms normal_order(const IsoAlgebra& algebra, const Word& w);

UEAElement commutator(const UEAElement& a, const UEAElement& b);
Scalar counit(const UEAElement& g);
UEAElement antipode(const UEAElement& g);

/// Element of U(iso(m))^{(x) n}; each leg is PBW ordered.
class TensorUEA {
public:
    using Key = std::vector<Word>;
    using Terms = std::map<Key, Scalar>;

    TensorUEA(std::size_t m, std::size_t factors);

    static TensorUEA one(std::size_t m, std::size_t factors);
    /// g placed in leg `leg`, identity elsewhere.
    static TensorUEA in_leg(const UEAElement& g, std::size_t leg, std::size_t factors);
    /// a (x) b.
    static TensorUEA pure(const UEAElement& a, const UEAElement& b);

    std::size_t dim() const { return m_; }
    std::size_t factors() const { return factors_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_ordered(const Key& key, const Scalar& c);

    TensorUEA& operator+=(const TensorUEA& o);
    TensorUEA& operator-=(const TensorUEA& o);
    TensorUEA& operator*=(const Scalar& c);
    friend TensorUEA operator+(TensorUEA a, const TensorUEA& b) { return a += b; }
    friend TensorUEA operator-(TensorUEA a, const TensorUEA& b) { return a -= b; }
    friend TensorUEA operator*(TensorUEA a, const Scalar& c) { return a *= c; }
    friend TensorUEA operator*(const Scalar& c, TensorUEA a) { return a *= c; }
    /// Legwise product.
    friend TensorUEA operator*(const TensorUEA& a, const TensorUEA& b);

    friend bool operator==(const TensorUEA&, const TensorUEA&) = default;

private:
    std::size_t m_;
    std::size_t factors_;
    Terms terms_;
};

/// Primitive coproduct iterated to n legs: generators go to the sum over
/// slots, products to products. Throws std::invalid_argument for n < 2.
TensorUEA coproduct_iter(const UEAElement& g, std::size_t n);
inline TensorUEA coproduct(const UEAElement& g) { return coproduct_iter(g, 2); }

/// Applies the primitive coproduct to one leg (n legs become n + 1).
TensorUEA coproduct_on_leg(const TensorUEA& t, std::size_t leg);
/// Applies the counit to one leg (n legs become n - 1).
TensorUEA counit_on_leg(const TensorUEA& t, std::size_t leg);
/// Product of all legs in order.
UEAElement multiply_legs(const TensorUEA& t);

/// Raised when an adjoint series fails to terminate within the order bound.
class NonTerminatingSeries : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// X = (i/2) theta^{hk} P_h (x) P_k, the logarithm of the Moyal twist.
TensorUEA twist_generator(const core::ThetaMatrix& theta);
/// Truncated exponential sum_{k <= order} X^k / k!.
TensorUEA twist_element(const core::ThetaMatrix& theta, unsigned order);

/// Nonzero terms ad_Y^k(t) / k! of exp(ad_Y) t, in order; the series stops
/// at the first vanishing term. Throws NonTerminatingSeries past max_order.
std::vector<TensorUEA> adjoint_series(const TensorUEA& y, const TensorUEA& t, unsigned max_order = 16);

/// F Delta(g) F^{-1} = exp(ad_X) Delta(g).
TensorUEA twisted_coproduct(const UEAElement& g, const core::ThetaMatrix& theta, unsigned max_order = 16);
/// Twisted coproduct applied to one leg.
TensorUEA twisted_coproduct_on_leg(const TensorUEA& t, std::size_t leg, const core::ThetaMatrix& theta);
/// F^3 Delta^(3)(g) (F^3)^{-1} with F^3 = exp(X_12 + X_13 + X_23).
TensorUEA twisted_coproduct3(const UEAElement& g, const core::ThetaMatrix& theta, unsigned max_order = 16);

/// beta = F^alpha S(F_alpha) from the twist truncated at `order`.
UEAElement twist_beta(const core::ThetaMatrix& theta, unsigned order);

}  // namespace moyal::hopf
