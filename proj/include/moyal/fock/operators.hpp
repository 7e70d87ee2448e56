#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Sparse>

#include "moyal/core/theta.hpp"
#include "moyal/fock/basis.hpp"
#include "moyal/hopf/modes.hpp"
#include "moyal/hopf/representation.hpp"
#include "moyal/hopf/uea.hpp"

namespace moyal::fock {

using FockMatrix = Eigen::SparseMatrix<std::complex<double>>;

/// Creation/annihilation matrices, one pair per mode. Creation out of the
/// top sector N = nmax is dropped, so a a^+ is only exact on N <= nmax - 1.
struct Ladder {
    std::vector<FockMatrix> annihilate;
    std::vector<FockMatrix> create;
    /// States whose a a^+ image is cut by the truncation.
    std::vector<std::size_t> edge_states;
};

/// Fermi sign convention: a^+_p |n> = (-1)^{sum_{i<p} n_i} |n + e_p>.
Ladder build_ccr(const FockBasis& basis);
Ladder build_ccr(const hopf::ModeBasis& modes, Statistics statistics, unsigned nmax);

FockMatrix identity(const FockBasis& basis);
FockMatrix number_operator(const FockBasis& basis);
/// Total momentum of each basis state, exact.
std::vector<hopf::Momentum> state_momenta(const hopf::ModeBasis& modes, const FockBasis& basis);

/// Largest entry of m in the columns of states with N <= nmax - 1.
double interior_residual(const FockMatrix& m, const FockBasis& basis);

/// Thrown when a generator maps a plane wave outside the mode span.
class ModeSpanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// sigma(g) = sum_j (g |> a^+_j) a^j for g a combination of the generators
/// P_a and M_ab (plus a multiple of 1, which acts as that multiple of the
/// number operator). P_a e_p = p_a e_p; M_ab e_p leaves the span unless its
/// contraction with every mode momentum vanishes, and then it acts as 0.
/// Throws ModeSpanError otherwise and std::invalid_argument for words of
/// degree >= 2.
FockMatrix jordan_schwinger(const hopf::UEAElement& g, const hopf::ModeBasis& modes, const FockBasis& basis,
                            const Ladder& ladder);

/// a^+_p exp(-(i/2) p theta sigma(P)) and a^p exp((i/2) p theta sigma(P)),
/// with the exponentials as exact diagonal phases.
Ladder dress(const hopf::ModeBasis& modes, const FockBasis& basis, const Ladder& ladder,
             const core::ThetaMatrix& theta);

struct HqccrResidual {
    double annihilators = 0;  // a^p a^q -/+ R a^q a^p
    double creators = 0;      // a^+_p a^+_q -/+ R a^+_q a^+_p
    double mixed = 0;         // a^p a^+_q - delta -/+ R a^+_q a^p
    double max() const;
};

/// Checks the three exchange families with R^{pq} = r.phase({p, q}) on the
/// interior N <= nmax - 1. Throws std::invalid_argument on size mismatch.
HqccrResidual verify_hqccr(const Ladder& dressed, const hopf::PhaseTensor& r, const FockBasis& basis);

/// max |(a^p)^dagger - a^+_p| and max |a^p Psi_0|.
double adjointness_residual(const Ladder& ladder);
double vacuum_residual(const Ladder& ladder, const FockBasis& basis);

/// Rank of span{ a^+_{i1} ... a^+_{in} Psi_0 } built from the dressed
/// creators. Throws std::out_of_range for n > nmax.
std::size_t sector_dimension(const hopf::ModeBasis& modes, Statistics statistics, unsigned n, unsigned nmax,
                             const core::ThetaMatrix& theta);
/// binomial(M + n - 1, n) for Bose, binomial(M, n) for Fermi.
std::size_t undeformed_sector_dimension(Statistics statistics, std::size_t modes, unsigned n);

}  // namespace moyal::fock
