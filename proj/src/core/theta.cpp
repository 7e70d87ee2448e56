#include "moyal/core/theta.hpp"

#include <stdexcept>

namespace moyal::core {

ThetaMatrix::ThetaMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Rational(0)) {
    if (dim == 0) throw std::invalid_argument("theta matrix dimension must be positive");
}

ThetaMatrix::ThetaMatrix(std::size_t dim, std::vector<Rational> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw std::invalid_argument("theta matrix dimension must be positive");
    if (entries_.size() != dim * dim) throw std::invalid_argument("theta matrix: wrong number of entries");
    for (auto& e : entries_) e.canonicalize();
    for (std::size_t h = 0; h < dim; ++h)
        for (std::size_t k = 0; k < dim; ++k)
            if (entries_[h * dim + k] != -entries_[k * dim + h])
                throw std::invalid_argument("theta matrix is not antisymmetric");
}

ThetaMatrix ThetaMatrix::planar(const Rational& t) {
    return ThetaMatrix(2, {Rational(0), t, Rational(-t), Rational(0)});
}

bool ThetaMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (sgn(e) != 0) return false;
    return true;
}

Rational ThetaMatrix::form(std::span<const Rational> p, std::span<const Rational> q) const {
    if (p.size() != dim_ || q.size() != dim_) throw std::invalid_argument("theta form: dimension mismatch");
    Rational acc(0);
    for (std::size_t a = 0; a < dim_; ++a) {
        if (sgn(p[a]) == 0) continue;
        for (std::size_t b = 0; b < dim_; ++b) acc += p[a] * entries_[a * dim_ + b] * q[b];
    }
    return acc;
}

std::vector<double> ThetaMatrix::to_double() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.get_d());
    return out;
}

ThetaMatrix multiparticle_theta(const ThetaMatrix& single, std::size_t particles) {
    if (particles < 1) throw std::invalid_argument("multiparticle_theta: particle count must be >= 1");
    const std::size_t m = single.dim();
    const std::size_t n = m * particles;
    std::vector<Rational> entries(n * n);
    for (std::size_t i = 0; i < particles; ++i)
        for (std::size_t j = 0; j < particles; ++j)
            for (std::size_t mu = 0; mu < m; ++mu)
                for (std::size_t nu = 0; nu < m; ++nu) entries[(i * m + mu) * n + j * m + nu] = single(mu, nu);
    return ThetaMatrix(n, std::move(entries));
}

}  // namespace moyal::core
