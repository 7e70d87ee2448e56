#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "moyal/hopf/modes.hpp"

namespace moyal::hopf {

/// Diagonal operator on (plane waves)^{(x) n}: the entry on e_{i1} (x) ... (x) e_{in}
/// is exp(i * angle) with an exact rational angle.
class PhaseTensor {
public:
    PhaseTensor(std::size_t modes, std::size_t order);

    std::size_t modes() const { return modes_; }
    std::size_t order() const { return order_; }
    std::size_t size() const { return angles_.size(); }

    const core::Rational& angle(std::size_t flat) const { return angles_[flat]; }
    core::Rational& angle(std::size_t flat) { return angles_[flat]; }
    const core::Rational& angle(const std::vector<std::size_t>& idx) const { return angles_[flat_index(idx)]; }
    std::complex<double> phase(std::size_t flat) const;
    std::complex<double> phase(const std::vector<std::size_t>& idx) const { return phase(flat_index(idx)); }

    /// Row-major: the last factor varies fastest.
    std::size_t flat_index(const std::vector<std::size_t>& idx) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;

    PhaseTensor inverse() const;
    Eigen::MatrixXcd matrix() const;

private:
    std::size_t modes_;
    std::size_t order_;
    std::vector<core::Rational> angles_;
};

/// Twist F^n in the plane-wave representation, by the recursion
/// F^{n+1} = (1^{(x)(n-1)} (x) F) [(id^{(x)(n-1)} (x) Delta) F^n].
/// For n = 2 the phase on (e_p, e_q) is exp((i/2) p theta q).
PhaseTensor f_matrix(const ModeBasis& modes, std::size_t n, const core::ThetaMatrix& theta);

/// R = tau(F) F^{-1}: phase exp(i q theta p) on (e_p, e_q).
PhaseTensor r_matrix(const ModeBasis& modes, const core::ThetaMatrix& theta);

/// max |(F (x) 1)(Delta (x) id)F - (1 (x) F)(id (x) Delta)F| over modes^3.
double check_cocycle(const core::ThetaMatrix& theta, const ModeBasis& modes);
/// max |(eps (x) id)F - 1| and |(id (x) eps)F - 1| (the counit sends P to 0).
double check_twist_counit(const core::ThetaMatrix& theta, const ModeBasis& modes);
/// max |R_21 R - 1| over modes^2.
double check_r_inverse(const ModeBasis& modes, const core::ThetaMatrix& theta);
/// max |R R^dagger - 1| entrywise.
double check_r_unitarity(const ModeBasis& modes, const core::ThetaMatrix& theta);

/// Permutation of {0..n-1}; tau[k] is the position receiving factor k.
using Permutation = std::vector<std::size_t>;

bool is_permutation(const Permutation& tau);
Permutation compose(const Permutation& sigma, const Permutation& tau);  // sigma o tau
int permutation_sign(const Permutation& tau);
std::vector<Permutation> all_permutations(std::size_t n);

/// P_tau on modes^{(x) n}: moves factor k to position tau[k], so that
/// P_sigma P_tau = P_{sigma o tau}.
Eigen::MatrixXcd permutation_matrix(const Permutation& tau, std::size_t modes);

/// F^n P_tau (F^n)^{-1}. Throws std::invalid_argument for an invalid permutation.
Eigen::MatrixXcd twisted_permutation(const Permutation& tau, const ModeBasis& modes, const core::ThetaMatrix& theta);

/// (1/n!) sum_tau sign^tau P^F_tau with sign = +1 (symmetrizer) or -1.
Eigen::MatrixXcd twisted_symmetrizer(std::size_t n, const ModeBasis& modes, const core::ThetaMatrix& theta, int sign);

}  // namespace moyal::hopf
