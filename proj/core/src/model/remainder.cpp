#include "sheito/model/remainder.hpp"

#include "sheito/kernels/periodic.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>

namespace sheito {

namespace {

// Fourier coefficients k = 0..N/2 of the periodic remainder sum_m G(tau, x + m) (1 - chi(tau, x + m))
// from N equispaced samples (spectrally accurate: the function is smooth and periodic).
std::vector<double> remainder_coefficients(double tau, int N)
{
    static const ParabolicCutoff chi;
    const int images = image_count(tau);
    std::vector<double> f(N);
    for (int j = 0; j < N; ++j) {
        const double x = static_cast<double>(j) / N - (j >= N / 2 ? 1.0 : 0.0);
        double s = 0;
        for (int m = -images; m <= images; ++m) {
            const double y = x + m;
            s += heat_kernel(tau, y) * (1 - chi(tau, y));
        }
        f[j] = s;
    }
    std::vector<std::complex<double>> c(N / 2 + 1);
    Fft(N).forward(f.data(), c.data());
    std::vector<double> out(N / 2 + 1);
    for (int k = 0; k <= N / 2; ++k) out[k] = c[k].real();
    return out;
}

constexpr int kSamples = 1024;

} // namespace

double RemainderSpectrum::direct(double tau, int k)
{
    if (tau <= 0) return 0;
    if (tau >= ParabolicCutoff::time_extent()) return std::exp(-heat_rate(k) * tau);
    return remainder_coefficients(tau, 4 * kSamples).at(k);
}

RemainderSpectrum::RemainderSpectrum(int max_mode, double tol, double table_step)
    : h_(table_step), extent_(ParabolicCutoff::time_extent())
{
    max_mode = std::min(max_mode, kSamples / 4);
    const int n = static_cast<int>(std::ceil(extent_ / h_)) + 3;
    std::vector<std::vector<double>> cols(n); // [i][k]
    cols[0].assign(max_mode + 1, 0.0);
    for (int i = 1; i < n; ++i) {
        const double tau = i * h_;
        if (tau >= extent_) {
            cols[i].resize(max_mode + 1);
            for (int k = 0; k <= max_mode; ++k) cols[i][k] = std::exp(-heat_rate(k) * tau);
            continue;
        }
        cols[i] = remainder_coefficients(tau, kSamples);
        cols[i].resize(max_mode + 1);
    }
    int keep = 0;
    for (int k = 0; k <= max_mode; ++k) {
        double peak = std::exp(-heat_rate(k) * extent_);
        for (int i = 0; i < n; ++i) peak = std::max(peak, std::abs(cols[i][k]));
        if (peak > tol) keep = k + 1;
    }
    table_.assign(keep, std::vector<double>(n));
    for (int k = 0; k < keep; ++k)
        for (int i = 0; i < n; ++i) table_[k][i] = cols[i][k];
}

double RemainderSpectrum::operator()(double tau, int k) const
{
    if (tau <= 0 || k >= modes()) return 0;
    if (tau >= extent_) return std::exp(-heat_rate(k) * tau);
    const std::vector<double>& t = table_[k];
    const double s = tau / h_;
    int i = static_cast<int>(std::floor(s)) - 1;
    i = std::clamp(i, 0, static_cast<int>(t.size()) - 4);
    const double u = s - i;
    // cubic Lagrange through nodes i..i+3 at offsets 0..3
    const double l0 = -(u - 1) * (u - 2) * (u - 3) / 6, l1 = u * (u - 2) * (u - 3) / 2;
    const double l2 = -u * (u - 1) * (u - 3) / 2, l3 = u * (u - 1) * (u - 2) / 6;
    return l0 * t[i] + l1 * t[i + 1] + l2 * t[i + 2] + l3 * t[i + 3];
}

SpectralField remainder_convolution(const SpectralField& zeta, int origin, const RemainderSpectrum& spectrum)
{
    const TorusGrid& g = zeta.grid();
    SpectralField out(g, zeta.first(), zeta.rows());
    const int n = zeta.rows() - origin;
    if (n <= 0) return out;
    int N = 1;
    while (N < 2 * n) N *= 2;
    std::vector<std::complex<double>> a(N), b(N);
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    const fftw_plan fa = fftw_plan_dft_1d(N, pa, pa, FFTW_FORWARD, FFTW_ESTIMATE);
    const fftw_plan fb = fftw_plan_dft_1d(N, pb, pb, FFTW_FORWARD, FFTW_ESTIMATE);
    const fftw_plan ia = fftw_plan_dft_1d(N, pa, pa, FFTW_BACKWARD, FFTW_ESTIMATE);
    const int K = std::min(spectrum.modes(), g.modes());
    for (int k = 0; k < K; ++k) {
        std::fill(a.begin(), a.end(), 0.0);
        std::fill(b.begin(), b.end(), 0.0);
        for (int m = 0; m < n; ++m) a[m] = (m == 0 ? 0.5 : 1.0) * zeta(origin + m, k);
        for (int l = 0; l < n; ++l) b[l] = spectrum(l * g.dt, k);
        fftw_execute(fa);
        fftw_execute(fb);
        for (int i = 0; i < N; ++i) a[i] *= b[i];
        fftw_execute(ia);
        const double s = g.dt / N;
        for (int m = 0; m < n; ++m) out(origin + m, k) = s * a[m];
    }
    fftw_destroy_plan(fa);
    fftw_destroy_plan(fb);
    fftw_destroy_plan(ia);
    return out;
}

} // namespace sheito
