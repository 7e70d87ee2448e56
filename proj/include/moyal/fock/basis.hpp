#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace moyal::fock {

enum class Statistics { Bose, Fermi };

std::string_view to_string(Statistics s);
/// +1 for bosons, -1 for fermions.
int exchange_sign(Statistics s);

using Occupation = std::vector<unsigned>;

/// Occupation-number basis truncated at total particle number nmax.
/// States are ordered by particle number, then lexicographically descending
/// within a sector, so the vacuum is state 0 and a_0^+ Psi_0 is state 1.
class FockBasis {
public:
    /// Throws std::invalid_argument for modes == 0 or nmax == 0.
    FockBasis(Statistics statistics, std::size_t modes, unsigned nmax);

    Statistics statistics() const { return statistics_; }
    std::size_t modes() const { return modes_; }
    unsigned nmax() const { return nmax_; }
    std::size_t size() const { return states_.size(); }

    const Occupation& state(std::size_t i) const { return states_[i]; }
    std::optional<std::size_t> index_of(const Occupation& occ) const;
    unsigned particle_number(std::size_t i) const;
    /// Indices of the states with exactly n particles.
    std::vector<std::size_t> sector(unsigned n) const;

private:
    Statistics statistics_;
    std::size_t modes_;
    unsigned nmax_;
    std::vector<Occupation> states_;
    std::map<Occupation, std::size_t> lookup_;
};

}  // namespace moyal::fock
