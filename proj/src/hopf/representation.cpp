#include "moyal/hopf/representation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moyal::hopf {

using core::Rational;

PhaseTensor::PhaseTensor(std::size_t modes, std::size_t order) : modes_(modes), order_(order) {
    if (modes == 0 || order == 0) throw std::invalid_argument("phase tensor needs modes and order >= 1");
    std::size_t n = 1;
    for (std::size_t k = 0; k < order; ++k) n *= modes;
    angles_.assign(n, Rational(0));
}

std::complex<double> PhaseTensor::phase(std::size_t flat) const { return std::polar(1.0, angles_[flat].get_d()); }

std::size_t PhaseTensor::flat_index(const std::vector<std::size_t>& idx) const {
    if (idx.size() != order_) throw std::invalid_argument("phase tensor index has wrong order");
    std::size_t flat = 0;
    for (std::size_t i : idx) {
        if (i >= modes_) throw std::out_of_range("mode index out of range");
        flat = flat * modes_ + i;
    }
    return flat;
}

std::vector<std::size_t> PhaseTensor::multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(order_);
    for (std::size_t k = order_; k-- > 0;) {
        idx[k] = flat % modes_;
        flat /= modes_;
    }
    return idx;
}

PhaseTensor PhaseTensor::inverse() const {
    PhaseTensor out(*this);
    for (auto& a : out.angles_) a = -a;
    return out;
}

Eigen::MatrixXcd PhaseTensor::matrix() const {
    Eigen::VectorXcd d(static_cast<Eigen::Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) d[static_cast<Eigen::Index>(i)] = phase(i);
    return d.asDiagonal();
}

namespace {

// Phase angle of F on legs carrying total momenta p (left) and q (right).
Rational twist_angle(const Momentum& p, const Momentum& q, const core::ThetaMatrix& theta) {
    return Rational(theta.form(p, q) / 2);
}

void require(const ModeBasis& modes, const core::ThetaMatrix& theta) {
    if (modes.dim() != theta.dim()) throw std::invalid_argument("mode dimension does not match theta");
}

// Angle of F^n on legs carrying momenta ps. Unfolds the recursion: the last
// leg of F^{n-1} is split by the coproduct (it carries the sum of the two
// trailing momenta) and F is multiplied on the trailing pair.
Rational iterated_twist_angle(std::vector<Momentum> ps, const core::ThetaMatrix& theta) {
    if (ps.size() == 2) return twist_angle(ps[0], ps[1], theta);
    const Momentum last = ps.back();
    ps.pop_back();
    const Momentum before = ps.back();
    ps.back() = add(before, last);
    return Rational(iterated_twist_angle(std::move(ps), theta) + twist_angle(before, last, theta));
}

}  // namespace

PhaseTensor f_matrix(const ModeBasis& modes, std::size_t n, const core::ThetaMatrix& theta) {
    if (n < 2) throw std::invalid_argument("f_matrix: need n >= 2");
    require(modes, theta);
    PhaseTensor out(modes.size(), n);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        std::vector<Momentum> ps;
        for (std::size_t i : out.multi_index(flat)) ps.push_back(modes[i]);
        out.angle(flat) = iterated_twist_angle(std::move(ps), theta);
    }
    return out;
}

PhaseTensor r_matrix(const ModeBasis& modes, const core::ThetaMatrix& theta) {
    require(modes, theta);
    PhaseTensor out(modes.size(), 2);
    for (std::size_t p = 0; p < modes.size(); ++p)
        for (std::size_t q = 0; q < modes.size(); ++q) {
            // tau(F) contributes q theta p / 2, F^{-1} contributes -p theta q / 2
            out.angle(out.flat_index({p, q})) =
                Rational(twist_angle(modes[q], modes[p], theta) - twist_angle(modes[p], modes[q], theta));
        }
    return out;
}

double check_cocycle(const core::ThetaMatrix& theta, const ModeBasis& modes) {
    require(modes, theta);
    double worst = 0;
    for (std::size_t a = 0; a < modes.size(); ++a)
        for (std::size_t b = 0; b < modes.size(); ++b)
            for (std::size_t c = 0; c < modes.size(); ++c) {
                const Momentum &p = modes[a], &q = modes[b], &r = modes[c];
                const double lhs = Rational(twist_angle(p, q, theta) + twist_angle(add(p, q), r, theta)).get_d();
                const double rhs = Rational(twist_angle(q, r, theta) + twist_angle(p, add(q, r), theta)).get_d();
                worst = std::max(worst, std::abs(std::polar(1.0, lhs) - std::polar(1.0, rhs)));
            }
    return worst;
}

double check_twist_counit(const core::ThetaMatrix& theta, const ModeBasis& modes) {
    require(modes, theta);
    const Momentum zero(modes.dim(), Rational(0));
    double worst = 0;
    for (const auto& p : modes.momenta()) {
        worst = std::max(worst, std::abs(std::polar(1.0, twist_angle(zero, p, theta).get_d()) - 1.0));
        worst = std::max(worst, std::abs(std::polar(1.0, twist_angle(p, zero, theta).get_d()) - 1.0));
    }
    return worst;
}

double check_r_inverse(const ModeBasis& modes, const core::ThetaMatrix& theta) {
    const PhaseTensor r = r_matrix(modes, theta);
    double worst = 0;
    for (std::size_t p = 0; p < modes.size(); ++p)
        for (std::size_t q = 0; q < modes.size(); ++q)
            worst = std::max(worst, std::abs(r.phase({q, p}) * r.phase({p, q}) - 1.0));
    return worst;
}

double check_r_unitarity(const ModeBasis& modes, const core::ThetaMatrix& theta) {
    const Eigen::MatrixXcd r = r_matrix(modes, theta).matrix();
    const auto n = r.rows();
    return (r * r.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

bool is_permutation(const Permutation& tau) {
    std::vector<bool> seen(tau.size(), false);
    for (std::size_t v : tau) {
        if (v >= tau.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw std::invalid_argument("permutation size mismatch");
    Permutation out(tau.size());
    for (std::size_t k = 0; k < tau.size(); ++k) out[k] = sigma[tau[k]];
    return out;
}

int permutation_sign(const Permutation& tau) {
    int sign = 1;
    for (std::size_t i = 0; i < tau.size(); ++i)
        for (std::size_t j = i + 1; j < tau.size(); ++j)
            if (tau[i] > tau[j]) sign = -sign;
    return sign;
}

std::vector<Permutation> all_permutations(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Eigen::MatrixXcd permutation_matrix(const Permutation& tau, std::size_t modes) {
    if (!is_permutation(tau)) throw std::invalid_argument("invalid permutation");
    const PhaseTensor shape(modes, tau.size());
    const auto dim = static_cast<Eigen::Index>(shape.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t flat = 0; flat < shape.size(); ++flat) {
        const auto idx = shape.multi_index(flat);
        std::vector<std::size_t> moved(idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) moved[tau[k]] = idx[k];
        out(static_cast<Eigen::Index>(shape.flat_index(moved)), static_cast<Eigen::Index>(flat)) = 1.0;
    }
    return out;
}

Eigen::MatrixXcd twisted_permutation(const Permutation& tau, const ModeBasis& modes, const core::ThetaMatrix& theta) {
    if (!is_permutation(tau)) throw std::invalid_argument("invalid permutation");
    const Eigen::MatrixXcd p = permutation_matrix(tau, modes.size());
    if (tau.size() < 2) return p;
    const PhaseTensor f = f_matrix(modes, tau.size(), theta);
    return f.matrix() * p * f.inverse().matrix();
}

Eigen::MatrixXcd twisted_symmetrizer(std::size_t n, const ModeBasis& modes, const core::ThetaMatrix& theta, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("symmetrizer sign must be +1 or -1");
    Eigen::MatrixXcd out;
    double count = 0;
    for (const auto& tau : all_permutations(n)) {
        Eigen::MatrixXcd term = twisted_permutation(tau, modes, theta) * double(sign == 1 ? 1 : permutation_sign(tau));
        out = count == 0 ? term : Eigen::MatrixXcd(out + term);
        ++count;
    }
    return out / count;
}

}  // namespace moyal::hopf
