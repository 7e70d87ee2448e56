#include "moyal/numeric/grid_star.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <fftw3.h>

namespace moyal::numeric {

using cd = std::complex<double>;

namespace {

// FFTW plan on a private aligned buffer, reused for every transform of one grid shape.
class Transform {
public:
    Transform(const GridSpec& spec, int direction) : size_(spec.size()) {
        buffer_ = static_cast<cd*>(fftw_malloc(sizeof(cd) * size_));
        const int dims[2] = {int(spec.n), int(spec.n)};
        auto* data = reinterpret_cast<fftw_complex*>(buffer_);
        plan_ = fftw_plan_dft(int(spec.m), dims, data, data, direction, FFTW_ESTIMATE);
        if (!plan_) {
            fftw_free(buffer_);
            throw std::runtime_error("FFTW planning failed");
        }
    }
    ~Transform() {
        fftw_destroy_plan(plan_);
        fftw_free(buffer_);
    }
    Transform(const Transform&) = delete;
    Transform& operator=(const Transform&) = delete;

    cd* data() { return buffer_; }
    void run() { fftw_execute(plan_); }
    std::vector<cd> apply(const std::vector<cd>& in) {
        std::copy(in.begin(), in.end(), buffer_);
        run();
        return {buffer_, buffer_ + size_};
    }

private:
    std::size_t size_;
    cd* buffer_ = nullptr;
    fftw_plan plan_ = nullptr;
};

double planar_theta(const core::ThetaMatrix& theta) { return theta.dim() == 2 ? theta(0, 1).get_d() : 0.0; }

double band_weight(const GridSpec& spec, const std::vector<cd>& spectrum) {
    double peak = 0, outer = 0;
    const long edge = 3 * long(spec.n) / 8;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const double v = std::abs(spectrum[i]);
        peak = std::max(peak, v);
        const bool far = spec.m == 1 ? std::labs(spec.centered(i)) >= edge
                                     : std::labs(spec.centered(i / spec.n)) >= edge ||
                                           std::labs(spec.centered(i % spec.n)) >= edge;
        if (far) outer = std::max(outer, v);
    }
    return peak == 0 ? 0 : outer / peak;
}

std::vector<cd> spectral_product(const GridSpec& spec, const std::vector<cd>& A, const std::vector<cd>& B, double t) {
    const std::size_t N = spec.n;
    std::vector<cd> C(spec.size(), 0.0);
    if (spec.m == 1) {
        for (std::size_t h = 0; h < N; ++h)
            for (std::size_t k = 0; k < N; ++k) C[(h + k) % N] += A[h] * B[k];
        return C;
    }
    // h theta k = t (h1 k2 - h2 k1); table[i][j] = exp(-(i/2) t f_i f_j).
    std::vector<cd> table(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            table[i * N + j] = std::polar(1.0, -0.5 * t * spec.frequency(i) * spec.frequency(j));
    for (std::size_t h1 = 0; h1 < N; ++h1)
        for (std::size_t h2 = 0; h2 < N; ++h2) {
            const cd a = A[h1 * N + h2];
            if (a == 0.0) continue;
            const cd* row = &table[h1 * N];
            for (std::size_t k1 = 0; k1 < N; ++k1) {
                const cd c1 = a * std::conj(table[h2 * N + k1]);
                const cd* b = &B[k1 * N];
                cd* out = &C[((h1 + k1) % N) * N];
                const std::size_t wrap = N - h2;
                for (std::size_t k2 = 0; k2 < wrap; ++k2) out[h2 + k2] += c1 * b[k2] * row[k2];
                for (std::size_t k2 = wrap; k2 < N; ++k2) out[h2 + k2 - N] += c1 * b[k2] * row[k2];
            }
        }
    return C;
}

std::vector<cd> shifted_product(const GridSpec& spec, const std::vector<cd>& A, const std::vector<cd>& B,
                                const core::ThetaMatrix& theta) {
    const std::size_t N = spec.n, size = spec.size();
    const double scale = 1.0 / double(size);
    const std::vector<double> th = theta.to_double();
    Transform backward(spec, FFTW_BACKWARD);
    std::vector<cd> out(size, 0.0);
    std::vector<double> h(spec.m), shift(spec.m);
    const auto freq = [&](std::size_t flat, std::size_t axis) {
        return spec.m == 1 ? spec.frequency(flat) : spec.frequency(axis == 0 ? flat / N : flat % N);
    };
    const auto index = [&](std::size_t flat, std::size_t axis) {
        return spec.m == 1 ? flat : (axis == 0 ? flat / N : flat % N);
    };
    for (std::size_t hf = 0; hf < size; ++hf) {
        if (A[hf] == 0.0) continue;
        for (std::size_t a = 0; a < spec.m; ++a) h[a] = freq(hf, a);
        // s_b = (1/2) theta^{ba} h_a, so that k . s = -(1/2) h theta k.
        for (std::size_t b = 0; b < spec.m; ++b) {
            shift[b] = 0;
            for (std::size_t a = 0; a < spec.m; ++a) shift[b] += 0.5 * th[b * spec.m + a] * h[a];
        }
        cd* buf = backward.data();
        for (std::size_t kf = 0; kf < size; ++kf) {
            double ks = 0;
            for (std::size_t b = 0; b < spec.m; ++b) ks += freq(kf, b) * shift[b];
            buf[kf] = B[kf] * std::polar(1.0, ks);
        }
        backward.run();
        for (std::size_t j = 0; j < size; ++j) {
            long turns = 0;
            for (std::size_t a = 0; a < spec.m; ++a) turns += long(index(j, a) * index(hf, a));
            const double angle = 2 * std::numbers::pi * double(turns % long(N)) / double(N);
            out[j] += A[hf] * std::polar(scale, angle) * buf[j];
        }
    }
    // Forward transform back so both paths end with the same inverse step.
    Transform forward(spec, FFTW_FORWARD);
    return forward.apply(out);
}

}  // namespace

double outer_band_weight(const GridFunction& f) {
    Transform forward(f.spec, FFTW_FORWARD);
    return band_weight(f.spec, forward.apply(f.values));
}

StarResult grid_star(const GridFunction& a, const GridFunction& b, const core::ThetaMatrix& theta,
                     const StarOptions& options) {
    if (!(a.spec == b.spec)) throw std::invalid_argument("grid_star: operands live on different grids");
    if (theta.dim() != a.spec.m) throw std::invalid_argument("grid_star: theta dimension does not match the grid");
    const GridSpec& spec = a.spec;
    Transform forward(spec, FFTW_FORWARD);
    const std::vector<cd> A = forward.apply(a.values);
    const std::vector<cd> B = forward.apply(b.values);

    std::vector<cd> C = options.method == StarMethod::Spectral ? spectral_product(spec, A, B, planar_theta(theta))
                                                               : shifted_product(spec, A, B, theta);
    Transform backward(spec, FFTW_BACKWARD);
    std::vector<cd> values = backward.apply(C);
    const double norm = 1.0 / (double(spec.size()) * double(spec.size()));
    for (auto& v : values) v *= norm;

    StarResult out{GridFunction(spec, std::move(values)), 0, false};
    out.outer_band = std::max(band_weight(spec, A), band_weight(spec, B));
    out.aliasing = out.outer_band > options.aliasing_tolerance;
    return out;
}

std::complex<double> windowed_wave_star_exact(const WindowedWave& f, const WindowedWave& g,
                                              const core::ThetaMatrix& theta, const std::vector<double>& x) {
    const std::size_t m = theta.dim();
    if (f.momentum.size() != m || g.momentum.size() != m || x.size() != m)
        throw std::invalid_argument("windowed_wave_star_exact: dimension mismatch");
    if (!(f.alpha > 0) || !(g.alpha > 0)) throw std::invalid_argument("windowed_wave_star_exact: windows must decay");
    const std::vector<double> th = theta.to_double();
    const Eigen::Index M = Eigen::Index(m);
    Eigen::MatrixXd t(M, M);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) t(Eigen::Index(a), Eigen::Index(b)) = th[a * m + b];
    Eigen::VectorXd h(M), k(M), xv(M);
    for (std::size_t a = 0; a < m; ++a) {
        h[Eigen::Index(a)] = f.momentum[a];
        k[Eigen::Index(a)] = g.momentum[a];
        xv[Eigen::Index(a)] = x[a];
    }
    const cd i(0, 1);

    // f * g = e^{i(h+k).x - (i/2) h theta k} int du dv F(u) G(v)
    //         exp(i(u+v).x - (i/2)(h theta v + u theta k + u theta v))
    // with Gaussian spectra F, G; a 2m-dimensional Gaussian integral.
    Eigen::MatrixXd a0 = Eigen::MatrixXd::Zero(2 * M, 2 * M);
    a0.topLeftCorner(M, M).diagonal().setConstant(1 / (2 * f.alpha));
    a0.bottomRightCorner(M, M).diagonal().setConstant(1 / (2 * g.alpha));
    Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(2 * M, 2 * M);
    coupling.topRightCorner(M, M) = t / 2;
    coupling.bottomLeftCorner(M, M) = t.transpose() / 2;
    const Eigen::MatrixXcd A = a0.cast<cd>() + i * coupling.cast<cd>();
    Eigen::VectorXcd J(2 * M);
    J.head(M) = i * xv.cast<cd>() - (i / 2.0) * (t * k).cast<cd>();
    J.tail(M) = i * xv.cast<cd>() - (i / 2.0) * (t.transpose() * h).cast<cd>();

    // det(A)/det(A0) = prod (1 + i lambda) over the spectrum of
    // A0^{-1/2} coupling A0^{-1/2}; principal roots per factor.
    const Eigen::VectorXd root = a0.diagonal().cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd K = root.asDiagonal() * coupling * root.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(K, Eigen::EigenvaluesOnly);
    cd prefactor = 1;
    for (Eigen::Index j = 0; j < eig.eigenvalues().size(); ++j)
        prefactor /= std::sqrt(cd(1, eig.eigenvalues()[j]));

    const cd quad = 0.5 * (J.transpose() * A.partialPivLu().solve(J))(0, 0);
    const cd carrier = i * (h + k).dot(xv) - (i / 2.0) * h.dot(t * k);
    return prefactor * std::exp(quad + carrier);
}

GaussianProduct gaussian_star_gaussian(const core::Rational& alpha, const core::Rational& beta,
                                       const core::Rational& t) {
    const core::Rational factor = 1 / (1 + alpha * beta * t * t);
    return {factor, core::Rational((alpha + beta) * factor)};
}

PolyGaussianPair poly_gaussian_pair(const core::PolyExpr& q, const core::Rational& alpha, const core::Rational& beta,
                                    const core::Rational& t) {
    if (q.nvars() != 2) throw std::invalid_argument("poly_gaussian_pair: planar polynomials only");
    const auto theta = core::ThetaMatrix::planar(t);
    const auto g = gaussian_star_gaussian(alpha, beta, t);
    const core::PolyExpr one = core::PolyExpr::constant(2, core::Scalar(1));
    return {core::star_poly_left(q, {one, alpha}, theta), {one, beta},
            core::star_poly_left(q, {core::PolyExpr::constant(2, core::Scalar(g.factor)), g.gamma}, theta)};
}

}  // namespace moyal::numeric
