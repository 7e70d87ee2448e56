#include "moyal/core/random.hpp"

namespace moyal::core {

namespace {

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}

}  // namespace

PolyExpr random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    std::uniform_int_distribution<unsigned> degree(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
    PolyExpr p(nvars);
    const std::size_t n = count(rng);
    for (std::size_t t = 0; t < n; ++t) {
        Exponents e(nvars, 0);
        const unsigned d = degree(rng);
        for (unsigned j = 0; j < d; ++j) ++e[var(rng)];
        p.add_term(e, Scalar(small_rational(rng), small_rational(rng)));
    }
    return p;
}

ThetaMatrix random_theta(std::mt19937_64& rng, std::size_t dim) {
    std::vector<Rational> entries(dim * dim, Rational(0));
    for (std::size_t h = 0; h < dim; ++h)
        for (std::size_t k = h + 1; k < dim; ++k) {
            const Rational v = small_rational(rng);
            entries[h * dim + k] = v;
            entries[k * dim + h] = -v;
        }
    return {dim, std::move(entries)};
}

}  // namespace moyal::core
