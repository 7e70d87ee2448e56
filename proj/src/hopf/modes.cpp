#include "moyal/hopf/modes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace moyal::hopf {

ModeBasis::ModeBasis(std::vector<Momentum> momenta) : momenta_(std::move(momenta)) {
    if (momenta_.empty()) throw std::invalid_argument("mode set is empty");
    const std::size_t m = momenta_.front().size();
    if (m == 0) throw std::invalid_argument("momenta need at least one component");
    for (std::size_t i = 0; i < momenta_.size(); ++i) {
        if (momenta_[i].size() != m) throw std::invalid_argument("momenta have mixed dimensions");
        for (std::size_t j = 0; j < i; ++j)
            if (momenta_[j] == momenta_[i]) throw std::invalid_argument("mode set contains a repeated momentum");
    }
}

ModeBasis ModeBasis::read(std::istream& in) {
    std::vector<Momentum> momenta;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        Momentum p;
        std::string token;
        while (fields >> token) {
            try {
                p.push_back(core::parse_rational(token));
            } catch (const std::exception& e) {
                throw std::invalid_argument("mode file line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (!p.empty()) momenta.push_back(std::move(p));
    }
    return ModeBasis(std::move(momenta));
}

ModeBasis ModeBasis::read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mode file " + path.string());
    return read(in);
}

Momentum add(const Momentum& a, const Momentum& b) {
    if (a.size() != b.size()) throw std::invalid_argument("momentum dimension mismatch");
    Momentum out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

core::Rational form(const Momentum& p, const core::ThetaMatrix& theta, const Momentum& q) {
    return theta.form(p, q);
}

}  // namespace moyal::hopf
