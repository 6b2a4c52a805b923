#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace sheito {

// Space-time grid on [t0, t0 + steps * dt] x T with M points y_j = j / M. Time nodes are
// t_n = t0 + n dt, n = 0..steps.
struct TorusGrid {
    int M = 64;
    double dt = 1.0 / (2 * 64 * 64);
    int steps = 0;
    double t0 = 0;

    static TorusGrid over(int M, double dt, double T, double t0 = 0);
    double dx() const { return 1.0 / M; }
    double T() const { return t0 + steps * dt; }
    double t(int n) const { return t0 + n * dt; }
    double x(int j) const { return static_cast<double>(j) / M; }
    int nodes() const { return steps + 1; }
    int modes() const { return M / 2 + 1; }
    // Nearest node index to time t (clamped).
    int node(double t) const;
    bool finite_difference_stable() const { return dt <= 0.5 * dx() * dx(); }
    void validate() const; // M a power of two >= 4, dt > 0, steps >= 0
};

// Real values at every node, row-major in time. Rows may cover only a subrange of the grid
// nodes: row r sits at node first + r.
class GridField {
public:
    GridField() = default;
    GridField(TorusGrid g, int first = 0, int rows = -1);

    const TorusGrid& grid() const { return g_; }
    int first() const { return first_; }
    int rows() const { return rows_; }
    double time(int r) const { return g_.t(first_ + r); }
    double& operator()(int r, int j) { return v_[static_cast<std::size_t>(r) * g_.M + j]; }
    double operator()(int r, int j) const { return v_[static_cast<std::size_t>(r) * g_.M + j]; }
    double* row(int r) { return v_.data() + static_cast<std::size_t>(r) * g_.M; }
    const double* row(int r) const { return v_.data() + static_cast<std::size_t>(r) * g_.M; }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }
    // Periodic lookup by spatial index (any integer).
    double at(int r, int j) const { return (*this)(r, ((j % g_.M) + g_.M) % g_.M); }
    bool all_finite() const;

private:
    TorusGrid g_;
    int first_ = 0, rows_ = 0;
    std::vector<double> v_;
};

// Fourier coefficients c_k, k = 0..M/2, per row, with f(y_j) = sum_{|k| <= M/2} c_k e^{2 pi i k y_j}
// (c_{-k} = conj c_k, Nyquist counted once).
class SpectralField {
public:
    using cplx = std::complex<double>;
    SpectralField() = default;
    SpectralField(TorusGrid g, int first = 0, int rows = -1);

    const TorusGrid& grid() const { return g_; }
    int first() const { return first_; }
    int rows() const { return rows_; }
    int modes() const { return g_.modes(); }
    double time(int r) const { return g_.t(first_ + r); }
    cplx& operator()(int r, int k) { return v_[static_cast<std::size_t>(r) * modes() + k]; }
    cplx operator()(int r, int k) const { return v_[static_cast<std::size_t>(r) * modes() + k]; }
    cplx* row(int r) { return v_.data() + static_cast<std::size_t>(r) * modes(); }
    const cplx* row(int r) const { return v_.data() + static_cast<std::size_t>(r) * modes(); }

private:
    TorusGrid g_;
    int first_ = 0, rows_ = 0;
    std::vector<cplx> v_;
};

// Real-to-complex transforms of length M in the SpectralField normalisation.
class Fft {
public:
    explicit Fft(int M);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    int size() const { return M_; }
    void forward(const double* in, std::complex<double>* out) const; // c_k = (1/M) sum_j f_j e^{-2 pi i k j / M}
    void inverse(const std::complex<double>* in, double* out) const; // f_j = sum_k c_k e^{2 pi i k j / M}

private:
    struct Plans;
    int M_;
    std::unique_ptr<Plans> p_;
};

SpectralField to_spectral(const GridField& f);
GridField to_physical(const SpectralField& f);

// Spectral derivative d^order/dx^order of each row; odd orders zero the Nyquist mode.
SpectralField dx_spectral(const SpectralField& f, int order = 1);
GridField dx(const GridField& f, int order = 1);

// Angular wavenumber 2 pi k and heat rate 4 pi^2 k^2.
inline double wavenumber(int k) { return 6.283185307179586 * k; }
inline double heat_rate(int k) { return 39.47841760435743 * k * k; }

} // namespace sheito
