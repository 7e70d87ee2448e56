#include "moyal/fock/basis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace moyal::fock {

std::string_view to_string(Statistics s) { return s == Statistics::Bose ? "bose" : "fermi"; }

int exchange_sign(Statistics s) { return s == Statistics::Bose ? 1 : -1; }

namespace {

// All occupations of `modes` modes with total n, descending lexicographically.
void occupations(std::size_t mode, std::size_t modes, unsigned remaining, unsigned cap, Occupation& current,
                 std::vector<Occupation>& out) {
    if (mode + 1 == modes) {
        if (remaining <= cap) {
            current[mode] = remaining;
            out.push_back(current);
        }
        return;
    }
    for (unsigned k = std::min(remaining, cap) + 1; k-- > 0;) {
        current[mode] = k;
        occupations(mode + 1, modes, remaining - k, cap, current, out);
    }
    current[mode] = 0;
}

}  // namespace

FockBasis::FockBasis(Statistics statistics, std::size_t modes, unsigned nmax)
    : statistics_(statistics), modes_(modes), nmax_(nmax) {
    if (modes == 0) throw std::invalid_argument("Fock basis needs at least one mode");
    if (nmax == 0) throw std::invalid_argument("Fock basis needs nmax >= 1");
    const unsigned cap = statistics == Statistics::Bose ? nmax : 1;
    Occupation current(modes, 0);
    for (unsigned n = 0; n <= nmax; ++n) occupations(0, modes, n, cap, current, states_);
    for (std::size_t i = 0; i < states_.size(); ++i) lookup_.emplace(states_[i], i);
}

std::optional<std::size_t> FockBasis::index_of(const Occupation& occ) const {
    auto it = lookup_.find(occ);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

unsigned FockBasis::particle_number(std::size_t i) const {
    return std::accumulate(states_[i].begin(), states_[i].end(), 0u);
}

std::vector<std::size_t> FockBasis::sector(unsigned n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (particle_number(i) == n) out.push_back(i);
    return out;
}

}  // namespace moyal::fock
