#include "moyal/hopf/uea.hpp"

#include <algorithm>

namespace moyal::hopf {

namespace {

template <typename Map, typename Key>
void accumulate(Map& terms, Key&& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(std::forward<Key>(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

}  // namespace

IsoAlgebra::IsoAlgebra(std::size_t m) : m_(m), rotations_(m * (m - 1) / 2) {
    if (m == 0) throw std::invalid_argument("iso(m) needs m >= 1");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) rotation_index_.emplace_back(a, b);
}

unsigned IsoAlgebra::momentum(std::size_t a) const {
    if (a >= m_) throw std::out_of_range("momentum index out of range");
    return static_cast<unsigned>(rotations_ + a);
}

unsigned IsoAlgebra::rotation(std::size_t a, std::size_t b) const {
    if (a >= b || b >= m_) throw std::out_of_range("rotation needs a < b < m");
    auto it = std::find(rotation_index_.begin(), rotation_index_.end(), std::pair(a, b));
    return static_cast<unsigned>(it - rotation_index_.begin());
}

void IsoAlgebra::add_rotation(std::vector<std::pair<unsigned, Scalar>>& out, std::size_t x, std::size_t y,
                              const Scalar& c) const {
    if (x == y) return;
    if (x < y)
        out.emplace_back(rotation(x, y), c);
    else
        out.emplace_back(rotation(y, x), -c);
}

std::vector<std::pair<unsigned, Scalar>> IsoAlgebra::bracket(unsigned g1, unsigned g2) const {
    std::vector<std::pair<unsigned, Scalar>> out;
    const bool p1 = is_momentum(g1), p2 = is_momentum(g2);
    if (p1 && p2) return out;
    if (p1) {
        for (auto& [g, c] : bracket(g2, g1)) out.emplace_back(g, -c);
        return out;
    }
    const auto [a, b] = rotation_index_[g1];
    const Scalar i = Scalar::i();
    if (p2) {
        const std::size_t c = g2 - rotations_;
        if (a == c) out.emplace_back(momentum(b), -i);
        if (b == c) out.emplace_back(momentum(a), i);
        return out;
    }
    const auto [c, d] = rotation_index_[g2];
    if (b == c) add_rotation(out, a, d, i);
    if (a == c) add_rotation(out, b, d, -i);
    if (b == d) add_rotation(out, a, c, -i);
    if (a == d) add_rotation(out, b, c, i);
    return out;
}

UEAElement::Terms normal_order(const IsoAlgebra& algebra, const Word& w) {
    UEAElement::Terms out;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
        out.emplace(w, Scalar(1));
        return out;
    }
    // g h = h g + [g, h]
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    for (const auto& [v, c] : normal_order(algebra, swapped)) accumulate(out, v, c);
    for (const auto& [g, c] : algebra.bracket(w[i], w[i + 1])) {
        Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        shorter.push_back(g);
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
        for (const auto& [v, c2] : normal_order(algebra, shorter)) accumulate(out, v, c * c2);
    }
    return out;
}

UEAElement UEAElement::one(std::size_t m) { return word(m, {}); }

UEAElement UEAElement::generator(std::size_t m, unsigned g) {
    UEAElement e(m);
    if (g >= e.algebra_.generator_count()) throw std::out_of_range("generator id out of range");
    e.add_ordered({g}, Scalar(1));
    return e;
}

UEAElement UEAElement::momentum(std::size_t m, std::size_t a) { return generator(m, IsoAlgebra(m).momentum(a)); }

UEAElement UEAElement::rotation(std::size_t m, const core::ThetaMatrix& omega) {
    if (omega.dim() != m) throw std::invalid_argument("rotation: omega dimension mismatch");
    UEAElement e(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            e.add_ordered({e.algebra_.rotation(a, b)}, Scalar(Rational(2 * omega(a, b))));
    return e;
}

UEAElement UEAElement::word(std::size_t m, const Word& w, const Scalar& c) {
    UEAElement e(m);
    for (unsigned g : w)
        if (g >= e.algebra_.generator_count()) throw std::out_of_range("generator id out of range");
    for (const auto& [v, k] : normal_order(e.algebra_, w)) e.add_ordered(v, c * k);
    return e;
}

void UEAElement::add_ordered(const Word& w, const Scalar& c) { accumulate(terms_, w, c); }

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    if (!(o.algebra_ == algebra_)) throw std::invalid_argument("UEA dimension mismatch");
    for (const auto& [w, c] : o.terms_) add_ordered(w, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    if (!(o.algebra_ == algebra_)) throw std::invalid_argument("UEA dimension mismatch");
    for (const auto& [w, c] : o.terms_) add_ordered(w, -c);
    return *this;
}

UEAElement& UEAElement::operator*=(const Scalar& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) {
    if (!(a.algebra_ == b.algebra_)) throw std::invalid_argument("UEA dimension mismatch");
    UEAElement out(a.algebra_.dim());
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            for (const auto& [v, k] : normal_order(a.algebra_, w)) out.add_ordered(v, ca * cb * k);
        }
    return out;
}

UEAElement commutator(const UEAElement& a, const UEAElement& b) { return a * b - b * a; }

Scalar counit(const UEAElement& g) {
    auto it = g.terms().find(Word{});
    return it == g.terms().end() ? Scalar(0) : it->second;
}

UEAElement antipode(const UEAElement& g) {
    const std::size_t m = g.algebra().dim();
    UEAElement out(m);
    for (const auto& [w, c] : g.terms()) {
        Word r(w.rbegin(), w.rend());
        out += UEAElement::word(m, r, w.size() % 2 == 0 ? c : -c);
    }
    return out;
}

TensorUEA::TensorUEA(std::size_t m, std::size_t factors) : m_(m), factors_(factors) {
    if (factors == 0) throw std::invalid_argument("tensor power needs at least one factor");
}

TensorUEA TensorUEA::one(std::size_t m, std::size_t factors) {
    TensorUEA t(m, factors);
    t.add_ordered(Key(factors), Scalar(1));
    return t;
}

TensorUEA TensorUEA::in_leg(const UEAElement& g, std::size_t leg, std::size_t factors) {
    if (leg >= factors) throw std::out_of_range("leg out of range");
    TensorUEA t(g.algebra().dim(), factors);
    for (const auto& [w, c] : g.terms()) {
        Key k(factors);
        k[leg] = w;
        t.add_ordered(k, c);
    }
    return t;
}

TensorUEA TensorUEA::pure(const UEAElement& a, const UEAElement& b) {
    return in_leg(a, 0, 2) * in_leg(b, 1, 2);
}

void TensorUEA::add_ordered(const Key& key, const Scalar& c) {
    if (key.size() != factors_) throw std::invalid_argument("tensor key has wrong number of legs");
    accumulate(terms_, key, c);
}

TensorUEA& TensorUEA::operator+=(const TensorUEA& o) {
    if (o.m_ != m_ || o.factors_ != factors_) throw std::invalid_argument("tensor shape mismatch");
    for (const auto& [k, c] : o.terms_) add_ordered(k, c);
    return *this;
}

TensorUEA& TensorUEA::operator-=(const TensorUEA& o) {
    if (o.m_ != m_ || o.factors_ != factors_) throw std::invalid_argument("tensor shape mismatch");
    for (const auto& [k, c] : o.terms_) add_ordered(k, -c);
    return *this;
}

TensorUEA& TensorUEA::operator*=(const Scalar& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorUEA operator*(const TensorUEA& a, const TensorUEA& b) {
    if (a.m_ != b.m_ || a.factors_ != b.factors_) throw std::invalid_argument("tensor shape mismatch");
    const IsoAlgebra algebra(a.m_);
    TensorUEA out(a.m_, a.factors_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            // distribute the legwise normal-ordered products
            std::map<TensorUEA::Key, Scalar> partial{{TensorUEA::Key{}, ca * cb}};
            for (std::size_t leg = 0; leg < a.factors_; ++leg) {
                Word w = ka[leg];
                w.insert(w.end(), kb[leg].begin(), kb[leg].end());
                const auto ordered = normal_order(algebra, w);
                std::map<TensorUEA::Key, Scalar> next;
                for (const auto& [key, c] : partial)
                    for (const auto& [v, k] : ordered) {
                        TensorUEA::Key grown = key;
                        grown.push_back(v);
                        accumulate(next, std::move(grown), c * k);
                    }
                partial = std::move(next);
            }
            for (const auto& [key, c] : partial) out.add_ordered(key, c);
        }
    return out;
}

namespace {

// All ways of distributing the letters of an ordered word over n legs;
// subsequences of an ordered word stay ordered.
void distribute(const Word& w, std::size_t pos, TensorUEA::Key& current, const Scalar& c, TensorUEA& out) {
    if (pos == w.size()) {
        out.add_ordered(current, c);
        return;
    }
    for (std::size_t leg = 0; leg < current.size(); ++leg) {
        current[leg].push_back(w[pos]);
        distribute(w, pos + 1, current, c, out);
        current[leg].pop_back();
    }
}

}  // namespace

TensorUEA coproduct_iter(const UEAElement& g, std::size_t n) {
    if (n < 2) throw std::invalid_argument("coproduct_iter: need n >= 2");
    TensorUEA out(g.algebra().dim(), n);
    for (const auto& [w, c] : g.terms()) {
        TensorUEA::Key current(n);
        distribute(w, 0, current, c, out);
    }
    return out;
}

TensorUEA coproduct_on_leg(const TensorUEA& t, std::size_t leg) {
    if (leg >= t.factors()) throw std::out_of_range("leg out of range");
    TensorUEA out(t.dim(), t.factors() + 1);
    for (const auto& [key, c] : t.terms()) {
        TensorUEA split(t.dim(), 2);
        TensorUEA::Key current(2);
        distribute(key[leg], 0, current, c, split);
        for (const auto& [pair, k] : split.terms()) {
            TensorUEA::Key grown(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
            grown.push_back(pair[0]);
            grown.push_back(pair[1]);
            grown.insert(grown.end(), key.begin() + static_cast<std::ptrdiff_t>(leg + 1), key.end());
            out.add_ordered(grown, k);
        }
    }
    return out;
}

TensorUEA counit_on_leg(const TensorUEA& t, std::size_t leg) {
    if (leg >= t.factors() || t.factors() < 2) throw std::out_of_range("counit_on_leg: invalid leg");
    TensorUEA out(t.dim(), t.factors() - 1);
    for (const auto& [key, c] : t.terms()) {
        if (!key[leg].empty()) continue;
        TensorUEA::Key shorter = key;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(leg));
        out.add_ordered(shorter, c);
    }
    return out;
}

UEAElement multiply_legs(const TensorUEA& t) {
    UEAElement out(t.dim());
    for (const auto& [key, c] : t.terms()) {
        Word w;
        for (const auto& leg : key) w.insert(w.end(), leg.begin(), leg.end());
        out += UEAElement::word(t.dim(), w, c);
    }
    return out;
}

TensorUEA twist_generator(const core::ThetaMatrix& theta) {
    const std::size_t m = theta.dim();
    TensorUEA x(m, 2);
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t k = 0; k < m; ++k) {
            if (sgn(theta(h, k)) == 0) continue;
            x += TensorUEA::pure(UEAElement::momentum(m, h), UEAElement::momentum(m, k)) *
                 Scalar(Rational(0), Rational(theta(h, k) / 2));
        }
    return x;
}

TensorUEA twist_element(const core::ThetaMatrix& theta, unsigned order) {
    const TensorUEA x = twist_generator(theta);
    TensorUEA term = TensorUEA::one(theta.dim(), 2);
    TensorUEA out = term;
    for (unsigned k = 1; k <= order; ++k) {
        term = term * x * Scalar(Rational(1, k));
        out += term;
    }
    return out;
}

std::vector<TensorUEA> adjoint_series(const TensorUEA& y, const TensorUEA& t, unsigned max_order) {
    std::vector<TensorUEA> terms;
    TensorUEA current = t;
    for (unsigned k = 0; !current.is_zero(); ++k) {
        if (k > max_order) throw NonTerminatingSeries("adjoint series did not terminate within the order bound");
        terms.push_back(current);
        current = (y * current - current * y) * Scalar(Rational(1, k + 1));
    }
    return terms;
}

TensorUEA twisted_coproduct(const UEAElement& g, const core::ThetaMatrix& theta, unsigned max_order) {
    if (theta.dim() != g.algebra().dim()) throw std::invalid_argument("twisted_coproduct: dimension mismatch");
    TensorUEA out(g.algebra().dim(), 2);
    for (const auto& term : adjoint_series(twist_generator(theta), coproduct(g), max_order)) out += term;
    return out;
}

TensorUEA twisted_coproduct_on_leg(const TensorUEA& t, std::size_t leg, const core::ThetaMatrix& theta) {
    if (leg >= t.factors()) throw std::out_of_range("leg out of range");
    const std::size_t m = t.dim();
    TensorUEA out(m, t.factors() + 1);
    for (const auto& [key, c] : t.terms()) {
        const TensorUEA split = twisted_coproduct(UEAElement::word(m, key[leg]), theta);
        for (const auto& [pair, k] : split.terms()) {
            TensorUEA::Key grown(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
            grown.push_back(pair[0]);
            grown.push_back(pair[1]);
            grown.insert(grown.end(), key.begin() + static_cast<std::ptrdiff_t>(leg + 1), key.end());
            out.add_ordered(grown, c * k);
        }
    }
    return out;
}

TensorUEA twisted_coproduct3(const UEAElement& g, const core::ThetaMatrix& theta, unsigned max_order) {
    const std::size_t m = g.algebra().dim();
    if (theta.dim() != m) throw std::invalid_argument("twisted_coproduct3: dimension mismatch");
    TensorUEA y(m, 3);
    const std::pair<std::size_t, std::size_t> legs[] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& [l, r] : legs)
        for (std::size_t h = 0; h < m; ++h)
            for (std::size_t k = 0; k < m; ++k) {
                if (sgn(theta(h, k)) == 0) continue;
                y += TensorUEA::in_leg(UEAElement::momentum(m, h), l, 3) *
                     TensorUEA::in_leg(UEAElement::momentum(m, k), r, 3) *
                     Scalar(Rational(0), Rational(theta(h, k) / 2));
            }
    TensorUEA out(m, 3);
    for (const auto& term : adjoint_series(y, coproduct_iter(g, 3), max_order)) out += term;
    return out;
}

UEAElement twist_beta(const core::ThetaMatrix& theta, unsigned order) {
    const std::size_t m = theta.dim();
    UEAElement out(m);
    const TensorUEA f = twist_element(theta, order);
    for (const auto& [key, c] : f.terms())
        out += UEAElement::word(m, key[0], c) * antipode(UEAElement::word(m, key[1]));
    return out;
}

}  // namespace moyal::hopf
