#include "sheito/spde/chaos.hpp"

#include "sheito/kernels/periodic.hpp"
#include "sheito/spde/solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace sheito {

ChaosKernel2::ChaosKernel2(TorusGrid g, std::vector<double> values) : g_(g), n_(g.steps * g.M), v_(std::move(values))
{
    if (v_.size() != static_cast<std::size_t>(n_) * n_) throw std::invalid_argument("ChaosKernel2: size mismatch");
}

ChaosKernel2 ChaosKernel2::tabulate(const TorusGrid& g, const std::function<double(double, double, double, double)>& f)
{
    const int n = g.steps * g.M;
    std::vector<double> v(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        const double s1 = g.t(a / g.M) + 0.5 * g.dt, y1 = g.x(a % g.M);
        for (int b = 0; b < n; ++b) v[static_cast<std::size_t>(a) * n + b] = f(s1, y1, g.t(b / g.M) + 0.5 * g.dt, g.x(b % g.M));
    }
    return ChaosKernel2(g, std::move(v));
}

bool ChaosKernel2::symmetric(double tol) const
{
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (std::abs((*this)(a, b) - (*this)(b, a)) > tol) return false;
    return true;
}

double ChaosKernel2::squared_norm() const
{
    const double cell = g_.dt * g_.dx();
    double s = 0;
    for (double v : v_) s += v * v;
    return s * cell * cell;
}

double double_wiener_integral(const ChaosKernel2& f, const WhiteNoiseDraw& draw)
{
    if (!f.symmetric()) throw std::invalid_argument("double_wiener_integral: kernel is not symmetric");
    const TorusGrid& g = draw.grid();
    if (g.M != f.grid().M || g.steps != f.grid().steps) throw std::invalid_argument("double_wiener_integral: grid mismatch");
    const GridField cells = draw.cells_physical();
    const std::vector<double>& w = cells.values();
    const double cell = g.dt * g.dx();
    double total = 0;
    for (int a = 0; a < f.cells(); ++a) {
        double row = 0;
        for (int b = 0; b < f.cells(); ++b)
            if (b != a) row += f(a, b) * w[b];
        total += w[a] * row + f(a, a) * (w[a] * w[a] - cell);
    }
    return total;
}

double walsh_integral(const GridField& integrand, const WhiteNoiseDraw& draw)
{
    const GridField w = draw.cells_physical();
    if (integrand.grid().M != w.grid().M || integrand.rows() != w.rows())
        throw std::invalid_argument("walsh_integral: integrand must have one row per cell");
    double s = 0;
    for (std::size_t i = 0; i < w.values().size(); ++i) s += integrand.values()[i] * w.values()[i];
    return s;
}

ItoTerms ito_terms_quadratic(double t, double x, const WhiteNoiseDraw& draw)
{
    const TorusGrid& g = draw.grid();
    if (g.t0 != 0) throw std::invalid_argument("ito_terms_quadratic: draw must start at t = 0");
    if (!(t > 0) || t > g.T() + 1e-12) throw std::out_of_range("ito_terms_quadratic: t outside (0, T]");
    const int n_t = g.node(t);
    const int M = g.M, K = M / 2;
    const int jx = static_cast<int>(std::lround(x * M)) % M;
    const double xg = g.x(jx);

    const SpectralField u = stochastic_convolution(draw);
    const SpectralField& dw = draw.increments();
    const Fft fft(M);

    std::vector<double> lambda(K + 1), expected_gradient(n_t);
    for (int k = 0; k <= K; ++k) lambda[k] = heat_rate(k);
    for (int n = 0; n < n_t; ++n) {
        const double s = g.t(n);
        double e = 0;
        for (int k = 1; k < K; ++k) e += 2 * wavenumber(k) * wavenumber(k) * (-std::expm1(-2 * lambda[k] * s)) / (2 * lambda[k]);
        expected_gradient[n] = e;
    }

    std::vector<std::complex<double>> modes(K + 1);
    std::vector<double> P(M), uph(M), dWph(M), du(M);
    ItoTerms r;
    for (int n = 0; n < n_t; ++n) {
        const double lag = t - g.t(n + 1);
        for (int k = 0; k <= K; ++k) {
            const double l = lambda[k];
            const double avg = l > 0 ? std::exp(-l * lag) * (-std::expm1(-l * g.dt)) / (l * g.dt) : 1.0;
            modes[k] = avg * std::polar(1.0, -wavenumber(k) * xg);
        }
        fft.inverse(modes.data(), P.data());
        fft.inverse(u.row(n), uph.data());
        fft.inverse(dw.row(n), dWph.data());
        for (int k = 0; k <= K; ++k) modes[k] = k < K ? std::complex<double>(0, wavenumber(k)) * u(n, k) : 0.0;
        fft.inverse(modes.data(), du.data());
        double walsh = 0, chaos = 0;
        for (int j = 0; j < M; ++j) {
            walsh += 2 * P[j] * uph[j] * dWph[j] * g.dx();
            chaos += 2 * P[j] * (du[j] * du[j] - expected_gradient[n]);
        }
        r.walsh += walsh;
        r.chaos2 += chaos * g.dt * g.dx();
    }
    fft.inverse(u.row(n_t), uph.data());
    r.lhs = uph[jx] * uph[jx];
    r.trace = integrated_trace(g.t(n_t));
    return r;
}

} // namespace sheito
