#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <vector>

#include "moyal/core/scalar.hpp"
#include "moyal/core/theta.hpp"

namespace moyal::hopf {

using Momentum = std::vector<core::Rational>;

/// Finite set of distinct plane-wave momenta p in Q^m.
class ModeBasis {
public:
    /// Throws std::invalid_argument on empty input, mixed dimensions or repeats.
    explicit ModeBasis(std::vector<Momentum> momenta);

    /// One momentum per line, whitespace- or comma-separated rational
    /// components; blank lines and '#' comments are skipped.
    static ModeBasis read(std::istream& in);
    static ModeBasis read_file(const std::filesystem::path& path);

    std::size_t dim() const { return momenta_.front().size(); }
    std::size_t size() const { return momenta_.size(); }
    const Momentum& operator[](std::size_t i) const { return momenta_[i]; }
    const std::vector<Momentum>& momenta() const { return momenta_; }

private:
    std::vector<Momentum> momenta_;
};

Momentum add(const Momentum& a, const Momentum& b);

/// p_a theta^{ab} q_b.
core::Rational form(const Momentum& p, const core::ThetaMatrix& theta, const Momentum& q);

}  // namespace moyal::hopf
