#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <variant>
#include <vector>

#include "moyal/core/star.hpp"

namespace moyal::numeric {

/// Periodic grid on [-L, L)^m with N samples per axis:
/// x_j = -L + j * 2L/N. Only m = 1 and m = 2 are supported.
struct GridSpec {
    std::size_t m = 2;
    std::size_t n = 64;
    double half_width = 8;

    /// Throws std::invalid_argument unless m in {1, 2}, N a power of two >= 2, L > 0.
    void validate() const;
    std::size_t size() const;
    double spacing() const { return 2 * half_width / double(n); }
    double cell_volume() const;
    double coordinate(std::size_t j) const { return -half_width + double(j) * spacing(); }
    /// Signed frequency index in [-N/2, N/2) for FFT position j.
    long centered(std::size_t j) const;
    /// Angular frequency pi * centered(j) / L.
    double frequency(std::size_t j) const;
    /// Coordinates of flat (row-major, last axis fastest) index.
    std::vector<double> point(std::size_t flat) const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct GridFunction {
    GridSpec spec;
    std::vector<std::complex<double>> values;

    explicit GridFunction(const GridSpec& s);
    GridFunction(const GridSpec& s, std::vector<std::complex<double>> v);

    GridFunction conj() const;
    double max_abs() const;
};

/// Largest |a - b|. Throws std::invalid_argument for different specs.
double max_difference(const GridFunction& a, const GridFunction& b);

/// (2 pi sigma^2)^{-m/2} exp(-|x - c|^2 / (2 sigma^2)); peak (2 pi)^{-m/2} sigma^{-m}.
struct Gaussian {
    std::vector<double> center;
    double sigma = 1;
};

/// exp(i k . x - alpha |x|^2): a plane wave under a Gaussian window.
struct WindowedWave {
    std::vector<double> momentum;
    double alpha = 1;
};

/// prod_a psi_{n_a}(x_a / s) with psi_n the normalized Hermite functions.
struct Hermite {
    std::vector<unsigned> order;
    double scale = 1;
};

using Descriptor = std::variant<Gaussian, WindowedWave, Hermite, core::PolyGaussian>;

/// Throws std::invalid_argument when the descriptor's dimension differs from m.
GridFunction sample(const Descriptor& d, const GridSpec& spec);

/// Riemann sum times cell volume.
std::complex<double> grid_integral(const GridFunction& a);

/// Binary layout, little-endian: "MGRD", uint32 version (1), uint32 m,
/// uint32 N, float64 L, then N^m (re, im) float64 pairs in row-major order.
void write_binary(std::ostream& out, const GridFunction& f);
GridFunction read_binary(std::istream& in);
void write_binary_file(const std::filesystem::path& path, const GridFunction& f);
GridFunction read_binary_file(const std::filesystem::path& path);

/// Columns x1[,x2],re,im.
void write_csv(std::ostream& out, const GridFunction& f);

}  // namespace moyal::numeric
