#pragma once

// Internal: the Moyal twist exp((i/2) Theta^{hk} d_h (x) d_k) applied to a
// formal tensor product of monomials. The exponential of a sum of commuting
// pieces factorizes over the ordered pairs (h, k), and each factor
// terminates on monomials, so the expansion is exact.

#include <map>
#include <utility>

#include "moyal/core/poly.hpp"
#include "moyal/core/theta.hpp"

namespace moyal::core::detail {

using BiTerms = std::map<std::pair<Exponents, Exponents>, Scalar>;

enum class RightLeg {
    /// The right leg is a polynomial: d_k lowers its exponent.
    Differentiate,
    /// The right leg is a derivative multi-index: d_k raises it.
    Accumulate,
};

inline void add_to(BiTerms& terms, std::pair<Exponents, Exponents> key, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(std::move(key), v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms.erase(it);
    }
}

inline BiTerms apply_twist(BiTerms terms, const ThetaMatrix& theta, RightLeg mode) {
    const std::size_t n = theta.dim();
    const Scalar half_i(Rational(0), Rational(1, 2));
    for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(theta(h, k)) == 0) continue;
            const Scalar c = half_i * Scalar(theta(h, k));
            BiTerms next;
            for (const auto& [key, v] : terms) {
                const auto& [left, right] = key;
                unsigned jmax = left[h];
                if (mode == RightLeg::Differentiate) jmax = std::min(jmax, right[k]);
                Scalar coef = v;
                for (unsigned j = 0;; ++j) {
                    Exponents l = left;
                    Exponents r = right;
                    l[h] -= j;
                    if (mode == RightLeg::Differentiate)
                        r[k] -= j;
                    else
                        r[k] += j;
                    add_to(next, {std::move(l), std::move(r)}, coef);
                    if (j == jmax) break;
                    // c^{j+1}/(j+1)! * falling factorials, built incrementally
                    coef *= c * Scalar(static_cast<long>(left[h] - j));
                    if (mode == RightLeg::Differentiate) coef *= Scalar(static_cast<long>(right[k] - j));
                    coef /= Scalar(static_cast<long>(j + 1));
                }
            }
            terms = std::move(next);
        }
    }
    return terms;
}

}  // namespace moyal::core::detail
