#include "sheito/spde/solvers.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sheito {

SpectralField stochastic_convolution(const WhiteNoiseDraw& draw, ConvolutionMethod m)
{
    const TorusGrid& g = draw.grid();
    SpectralField u(g);
    const SpectralField& dw = draw.increments();
    const SpectralField* z = m == ConvolutionMethod::ExactOu ? &draw.ou_innovations() : nullptr;
    for (int k = 0; k < g.modes(); ++k) {
        const double decay = std::exp(-heat_rate(k) * g.dt);
        std::complex<double> v = 0;
        for (int n = 0; n < g.steps; ++n) {
            v = z ? decay * v + (*z)(n, k) : decay * (v + dw(n, k));
            u(n + 1, k) = v;
        }
    }
    return u;
}

namespace {

std::vector<double> time_taps(double eps, double dt, const Mollifier& rho, int& half, bool normalise)
{
    // node n gathers cells m = n - half - 1 + i, i = 0..2 half + 1, at lag t_n - s_m = (half - i + 1/2) dt
    const double reach = Mollifier::t_radius() * eps * eps;
    half = static_cast<int>(std::ceil(reach / dt));
    std::vector<double> taps(2 * half + 2);
    for (int i = 0; i < static_cast<int>(taps.size()); ++i) {
        const double lag = (half - i + 0.5) * dt;
        taps[i] = rho.p(lag / (eps * eps)) / (eps * eps) * dt;
    }
    if (normalise) {
        double mass = 0;
        for (double w : taps) mass += w;
        for (double& w : taps) w /= mass;
    }
    return taps;
}

} // namespace

double mollifier_time_mass(double eps, double dt, const Mollifier& rho)
{
    int half = 0;
    double s = 0;
    for (double w : time_taps(eps, dt, rho, half, false)) s += w;
    return s;
}

SpectralField mollify_noise(const WhiteNoiseDraw& draw, double eps, const Mollifier& rho)
{
    const TorusGrid& g = draw.grid();
    if (eps < 4 * g.dx())
        throw ResolutionError("mollify_noise: eps = " + std::to_string(eps) + " below 4 dx = " + std::to_string(4 * g.dx()));
    if (g.dt > eps * eps / 16)
        throw ResolutionError("mollify_noise: dt = " + std::to_string(g.dt) + " exceeds eps^2 / 16");
    int half = 0;
    const std::vector<double> taps = time_taps(eps, g.dt, rho, half, true);
    // node n needs cells n - half - 1 .. n + half
    const int first = half + 1, last = g.steps - half - 1;
    if (last < first) throw ResolutionError("mollify_noise: draw window shorter than the mollifier support");
    SpectralField xi(g, first, last - first + 1);
    const SpectralField& dw = draw.increments();
    const double inv_dt = 1.0 / g.dt;
    const int L = static_cast<int>(taps.size());
    // node n = first + r gathers cells n - half - 1 + i; long tap lists go through the FFT, where
    // with reversed taps h'_l = taps[L - 1 - l] the sum is (dW * h')[n + half]
    const bool use_fft = L > 48;
    std::vector<std::complex<double>> a, h;
    int N = 1;
    fftw_plan fwd = nullptr, inv = nullptr;
    if (use_fft) {
        while (N < g.steps + L) N *= 2;
        a.resize(N);
        h.assign(N, 0.0);
        auto* pa = reinterpret_cast<fftw_complex*>(a.data());
        auto* ph = reinterpret_cast<fftw_complex*>(h.data());
        for (int l = 0; l < L; ++l) h[l] = taps[L - 1 - l];
        fftw_plan hp = fftw_plan_dft_1d(N, ph, ph, FFTW_FORWARD, FFTW_ESTIMATE);
        fftw_execute(hp);
        fftw_destroy_plan(hp);
        fwd = fftw_plan_dft_1d(N, pa, pa, FFTW_FORWARD, FFTW_ESTIMATE);
        inv = fftw_plan_dft_1d(N, pa, pa, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    for (int k = 0; k < g.modes(); ++k) {
        const double qk = rho.q_hat(wavenumber(k) * eps) * inv_dt;
        if (use_fft) {
            std::fill(a.begin(), a.end(), 0.0);
            for (int m = 0; m < g.steps; ++m) a[m] = dw(m, k);
            fftw_execute(fwd);
            for (int i = 0; i < N; ++i) a[i] *= h[i];
            fftw_execute(inv);
            for (int r = 0; r < xi.rows(); ++r) xi(r, k) = qk / N * a[first + r + half];
            continue;
        }
        for (int r = 0; r < xi.rows(); ++r) {
            const int n = first + r;
            std::complex<double> s = 0;
            for (int i = 0; i < L; ++i) s += taps[i] * dw(n - half - 1 + i, k);
            xi(r, k) = qk * s;
        }
    }
    if (use_fft) {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(inv);
    }
    return xi;
}

SpectralField solve_u_eps(const SpectralField& zeta, int start)
{
    const TorusGrid& g = zeta.grid();
    SpectralField u(g, zeta.first(), zeta.rows());
    for (int k = 0; k < g.modes(); ++k) {
        const double z = heat_rate(k) * g.dt;
        double decay, a0, a1; // u_{n+1} = decay u_n + a0 zeta_n + a1 zeta_{n+1}
        if (z < 1e-4) {
            decay = std::exp(-z);
            a0 = g.dt * (0.5 - z / 3 + z * z / 8);
            a1 = g.dt * (0.5 - z / 6 + z * z / 24);
        } else {
            decay = std::exp(-z);
            a0 = g.dt * (-std::expm1(-z) - z * decay) / (z * z);
            a1 = g.dt * (z + std::expm1(-z)) / (z * z);
        }
        std::complex<double> v = 0;
        for (int r = start; r + 1 < zeta.rows(); ++r) {
            v = decay * v + a0 * zeta(r, k) + a1 * zeta(r + 1, k);
            u(r + 1, k) = v;
        }
    }
    return u;
}

GridField chain_rule_field(const Nonlinearity& phi, const GridField& u, const GridField& u_x, const GridField& xi)
{
    GridField f(u.grid(), u.first(), u.rows());
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        const double v = u.values()[i], d = u_x.values()[i];
        f.values()[i] = phi.derivative(1, v) * xi.values()[i] - phi.derivative(2, v) * d * d;
    }
    return f;
}

GridField slice_rows(const GridField& f, int first, int rows)
{
    if (first < 0 || first + rows > f.rows()) throw std::out_of_range("slice_rows: range outside field");
    GridField s(f.grid(), f.first() + first, rows);
    std::copy(f.row(first), f.row(first) + static_cast<std::size_t>(rows) * f.grid().M, s.row(0));
    return s;
}

SpectralField slice_rows(const SpectralField& f, int first, int rows)
{
    if (first < 0 || first + rows > f.rows()) throw std::out_of_range("slice_rows: range outside field");
    SpectralField s(f.grid(), f.first() + first, rows);
    std::copy(f.row(first), f.row(first) + static_cast<std::size_t>(rows) * f.modes(), s.row(0));
    return s;
}

} // namespace sheito
