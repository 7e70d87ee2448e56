#include "moyal/numeric/grid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace moyal::numeric {

void GridSpec::validate() const {
    if (m != 1 && m != 2) throw std::invalid_argument("grid: only m = 1 and m = 2 are supported");
    if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("grid: N must be a power of two >= 2");
    if (!(half_width > 0)) throw std::invalid_argument("grid: L must be positive");
}

std::size_t GridSpec::size() const { return m == 1 ? n : n * n; }

double GridSpec::cell_volume() const { return std::pow(spacing(), double(m)); }

long GridSpec::centered(std::size_t j) const {
    const long jj = long(j), nn = long(n);
    return jj < nn / 2 ? jj : jj - nn;
}

double GridSpec::frequency(std::size_t j) const { return std::numbers::pi * double(centered(j)) / half_width; }

std::vector<double> GridSpec::point(std::size_t flat) const {
    if (m == 1) return {coordinate(flat)};
    return {coordinate(flat / n), coordinate(flat % n)};
}

GridFunction::GridFunction(const GridSpec& s) : spec(s) {
    spec.validate();
    values.assign(spec.size(), 0.0);
}

GridFunction::GridFunction(const GridSpec& s, std::vector<std::complex<double>> v) : spec(s), values(std::move(v)) {
    spec.validate();
    if (values.size() != spec.size()) throw std::invalid_argument("grid function size does not match its spec");
}

GridFunction GridFunction::conj() const {
    GridFunction out(spec);
    std::transform(values.begin(), values.end(), out.values.begin(), [](auto z) { return std::conj(z); });
    return out;
}

double GridFunction::max_abs() const {
    double out = 0;
    for (auto z : values) out = std::max(out, std::abs(z));
    return out;
}

double max_difference(const GridFunction& a, const GridFunction& b) {
    if (!(a.spec == b.spec)) throw std::invalid_argument("grid functions live on different grids");
    double out = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i) out = std::max(out, std::abs(a.values[i] - b.values[i]));
    return out;
}

namespace {

void check_dim(std::size_t got, const GridSpec& spec) {
    if (got != spec.m) throw std::invalid_argument("sample: descriptor dimension does not match the grid");
}

double hermite_function(unsigned n, double x) {
    // psi_0 = pi^{-1/4} e^{-x^2/2}, psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1}
    double prev = 0;
    double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2);
    for (unsigned k = 0; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

struct Sampler {
    const GridSpec& spec;

    std::complex<double> operator()(const Gaussian& g, const std::vector<double>& x) const {
        double r2 = 0;
        for (std::size_t a = 0; a < x.size(); ++a) r2 += (x[a] - g.center[a]) * (x[a] - g.center[a]);
        const double norm = std::pow(2 * std::numbers::pi * g.sigma * g.sigma, -double(spec.m) / 2);
        return norm * std::exp(-r2 / (2 * g.sigma * g.sigma));
    }
    std::complex<double> operator()(const WindowedWave& w, const std::vector<double>& x) const {
        double r2 = 0, phase = 0;
        for (std::size_t a = 0; a < x.size(); ++a) {
            r2 += x[a] * x[a];
            phase += w.momentum[a] * x[a];
        }
        return std::polar(std::exp(-w.alpha * r2), phase);
    }
    std::complex<double> operator()(const Hermite& h, const std::vector<double>& x) const {
        double out = 1;
        for (std::size_t a = 0; a < x.size(); ++a) out *= hermite_function(h.order[a], x[a] / h.scale);
        return out;
    }
    std::complex<double> operator()(const core::PolyGaussian& f, const std::vector<double>& x) const {
        return f.evaluate(x);
    }
};

std::size_t descriptor_dim(const Descriptor& d) {
    return std::visit(
        [](const auto& v) -> std::size_t {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Gaussian>) return v.center.size();
            else if constexpr (std::is_same_v<T, WindowedWave>) return v.momentum.size();
            else if constexpr (std::is_same_v<T, Hermite>) return v.order.size();
            else return v.poly.nvars();
        },
        d);
}

template <class T>
void put(std::ostream& out, T v) {
    std::array<char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    out.write(bytes.data(), std::streamsize(sizeof(T)));
}

template <class T>
T get(std::istream& in) {
    std::array<char, sizeof(T)> bytes;
    if (!in.read(bytes.data(), std::streamsize(sizeof(T)))) throw std::runtime_error("grid file truncated");
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    T v;
    std::memcpy(&v, bytes.data(), sizeof(T));
    return v;
}

constexpr char kMagic[4] = {'M', 'G', 'R', 'D'};

}  // namespace

GridFunction sample(const Descriptor& d, const GridSpec& spec) {
    spec.validate();
    check_dim(descriptor_dim(d), spec);
    GridFunction out(spec);
    const Sampler sampler{spec};
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto x = spec.point(i);
        out.values[i] = std::visit([&](const auto& v) { return sampler(v, x); }, d);
    }
    return out;
}

std::complex<double> grid_integral(const GridFunction& a) {
    std::complex<double> sum = 0;
    for (auto z : a.values) sum += z;
    return sum * a.spec.cell_volume();
}

void write_binary(std::ostream& out, const GridFunction& f) {
    out.write(kMagic, 4);
    put<std::uint32_t>(out, 1);
    put<std::uint32_t>(out, std::uint32_t(f.spec.m));
    put<std::uint32_t>(out, std::uint32_t(f.spec.n));
    put<double>(out, f.spec.half_width);
    for (auto z : f.values) {
        put<double>(out, z.real());
        put<double>(out, z.imag());
    }
    if (!out) throw std::runtime_error("failed to write grid data");
}

GridFunction read_binary(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) throw std::runtime_error("not a grid file");
    if (get<std::uint32_t>(in) != 1) throw std::runtime_error("unsupported grid file version");
    GridSpec spec;
    spec.m = get<std::uint32_t>(in);
    spec.n = get<std::uint32_t>(in);
    spec.half_width = get<double>(in);
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("bad grid header: ") + e.what());
    }
    GridFunction out(spec);
    for (auto& z : out.values) {
        const double re = get<double>(in);
        const double im = get<double>(in);
        z = {re, im};
    }
    return out;
}

void write_binary_file(const std::filesystem::path& path, const GridFunction& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    write_binary(out, f);
}

GridFunction read_binary_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_binary(in);
}

void write_csv(std::ostream& out, const GridFunction& f) {
    out << (f.spec.m == 1 ? "x1,re,im\n" : "x1,x2,re,im\n");
    const auto old = out.precision(17);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        for (double c : f.spec.point(i)) out << c << ',';
        out << f.values[i].real() << ',' << f.values[i].imag() << '\n';
    }
    out.precision(old);
}

}  // namespace moyal::numeric
