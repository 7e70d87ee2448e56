#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "moyal/core/operator.hpp"
#include "moyal/dynamics/landau.hpp"

namespace moyal::dynamics {

/// One eigenvalue of a block-diagonalized planar operator. Blocks are the
/// connected components of the matrix in the circular oscillator basis
/// |n+, n->; a block is labelled by its lowest state (n+, n-), the index is
/// the position of the eigenvalue inside the block (ascending).
struct SpectrumLevel {
    double value = 0;
    unsigned label_plus = 0;
    unsigned label_minus = 0;
    std::size_t index = 0;
    bool converged = false;
    /// Number of converged levels within the matching tolerance of this one.
    std::size_t multiplicity = 0;
};

struct Spectrum {
    /// Per-axis truncation of the oscillator basis (n+, n- < basis_size).
    std::size_t basis_size = 0;
    /// Sorted ascending.
    std::vector<SpectrumLevel> levels;

    std::vector<SpectrumLevel> converged_levels() const;
};

struct SpectrumOptions {
    /// Relative shift allowed between basis_size and 2*basis_size.
    double convergence_tolerance = 1e-10;
    /// Relative tolerance used for multiplicity counting.
    double multiplicity_tolerance = 1e-8;
    /// Oscillator length squared; 0 selects 1/b.
    double length_squared = 0;
};

/// Eigenvalues of an ordinary planar differential operator with polynomial
/// coefficients, truncated to n+, n- < basis_size (no convergence check).
/// The operator must be hermitian on the truncation; throws otherwise.
Spectrum planar_spectrum(const core::DiffOperator& h, std::size_t basis_size, double length_squared);

/// Spectrum of the deformed Landau operator h_*, computed at basis_size and
/// 2*basis_size; a level is converged when its labelled counterpart moved
/// by less than the convergence tolerance. Requires b > 0 and
/// 1 + b*theta/2 > 0.
Spectrum landau_spectrum(const LandauParams& p, std::size_t basis_size, const SpectrumOptions& options = {});

/// CSV with columns index, eigenvalue, multiplicity, converged.
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);

}  // namespace moyal::dynamics
