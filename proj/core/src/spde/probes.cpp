#include "sheito/spde/probes.hpp"

#include "sheito/kernels/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sheito {

namespace {

double evaluate_at(const std::complex<double>* c, int K, double x)
{
    double s = c[0].real();
    for (int k = 1; k < K; ++k) s += 2 * (c[k] * std::polar(1.0, wavenumber(k) * x)).real();
    s += (c[K] * std::polar(1.0, wavenumber(K) * x)).real();
    return s;
}

} // namespace

MartingaleReport martingale_probe(const SpectralField& u, double eps, double x)
{
    const TorusGrid& g = u.grid();
    if (eps < 4 * g.dx()) throw ResolutionError("martingale_probe: eps below 4 dx");
    const int K = g.M / 2;
    MartingaleReport rep;
    rep.eps = eps;
    rep.x = x;
    rep.T = u.time(u.rows() - 1) - u.time(0);
    rep.expected = rep.T * trace_C(eps);

    std::vector<double> smoothing(K + 1);
    for (int k = 0; k <= K; ++k) smoothing[k] = std::exp(-heat_rate(k) * eps);
    std::vector<std::complex<double>> ue(K + 1), lap(K + 1);
    auto eval_row = [&](int r, double& value, double& laplacian) {
        for (int k = 0; k <= K; ++k) {
            ue[k] = smoothing[k] * u(r, k);
            lap[k] = -heat_rate(k) * ue[k];
        }
        value = evaluate_at(ue.data(), K, x);
        laplacian = evaluate_at(lap.data(), K, x);
    };
    double prev_v, prev_l;
    eval_row(0, prev_v, prev_l);
    rep.initial = prev_v;
    for (int r = 1; r < u.rows(); ++r) {
        double v, l;
        eval_row(r, v, l);
        const double dw = (v - prev_v) - 0.5 * g.dt * (l + prev_l);
        rep.qv += dw * dw;
        prev_v = v;
        prev_l = l;
    }

    const Fft fft(g.M);
    std::vector<double> a(g.M), b(g.M);
    for (int r = 0; r < u.rows(); ++r) {
        for (int k = 0; k <= K; ++k) ue[k] = smoothing[k] * u(r, k);
        fft.inverse(ue.data(), a.data());
        fft.inverse(u.row(r), b.data());
        for (int j = 0; j < g.M; ++j) rep.sup_distance = std::max(rep.sup_distance, std::abs(a[j] - b[j]));
    }
    return rep;
}

SmoothPath smooth_path(const WhiteNoiseDraw& draw, double eps, const Mollifier& rho)
{
    const TorusGrid& g = draw.grid();
    const SpectralField xi = mollify_noise(draw, eps, rho);
    const int n0 = g.node(0.0);
    if (std::abs(g.t(n0)) > 1e-9 * g.dt || n0 < xi.first())
        throw std::invalid_argument("smooth_path: t = 0 must be a node covered by the mollified noise");
    SmoothPath p;
    p.eps = eps;
    p.origin_row = n0 - xi.first();
    const SpectralField u = solve_u_eps(xi, p.origin_row);
    p.xi = to_physical(xi);
    p.u = to_physical(u);
    p.u_x = to_physical(dx_spectral(u, 1));
    return p;
}

std::vector<DivergenceRow> divergence_probe(const Nonlinearity& phi, const std::vector<double>& eps_list,
                                            const std::vector<RenormalisationPair>& constants, const WhiteNoiseDraw& draw,
                                            const DivergenceOptions& opt)
{
    if (constants.size() != eps_list.size()) throw std::invalid_argument("divergence_probe: one constant pair per eps");
    std::vector<double> x_centers, t_centers = opt.t_centers;
    for (int i = 0; i < opt.x_centers; ++i) x_centers.push_back((i + 0.5) / opt.x_centers);

    std::vector<DivergenceRow> rows;
    for (std::size_t e = 0; e < eps_list.size(); ++e) {
        const SmoothPath p = smooth_path(draw, eps_list[e]);
        const auto [c1, c2] = constants[e];
        const TorusGrid& g = p.u.grid();
        // separable test functions: project each row on the spatial factor of every x-center,
        // for phi'(u) xi, phi''(u) (d_x u)^2 and phi''(u)
        const int R = p.u.rows(), X = static_cast<int>(x_centers.size());
        std::vector<double> wx(static_cast<std::size_t>(X) * g.M);
        for (int i = 0; i < X; ++i) {
            const TestFunction psi(0, x_centers[i], opt.lambda);
            for (int j = 0; j < g.M; ++j) wx[static_cast<std::size_t>(i) * g.M + j] = psi.space_factor(g.x(j));
        }
        std::vector<double> proj(static_cast<std::size_t>(R) * X * 3, 0.0), f(3 * g.M);
        for (int r = p.origin_row; r < R; ++r) {
            for (int j = 0; j < g.M; ++j) {
                const double u = p.u(r, j), d = p.u_x(r, j);
                const double d2 = phi.derivative(2, u);
                f[j] = phi.derivative(1, u) * p.xi(r, j);
                f[g.M + j] = d2 * d * d;
                f[2 * g.M + j] = d2;
            }
            for (int i = 0; i < X; ++i) {
                const double* w = &wx[static_cast<std::size_t>(i) * g.M];
                double s0 = 0, s1 = 0, s2 = 0;
                for (int j = 0; j < g.M; ++j) {
                    s0 += w[j] * f[j];
                    s1 += w[j] * f[g.M + j];
                    s2 += w[j] * f[2 * g.M + j];
                }
                double* out = &proj[(static_cast<std::size_t>(r) * X + i) * 3];
                out[0] = s0;
                out[1] = s1;
                out[2] = s2;
            }
        }
        DivergenceRow row{eps_list[e], c1, c2};
        const double cell = g.dt * g.dx();
        for (double tc : t_centers) {
            const TestFunction psi(tc, 0, opt.lambda);
            const int lo = g.node(tc - psi.time_radius()) - p.u.first();
            const int hi = g.node(tc + psi.time_radius()) - p.u.first();
            if (lo < p.origin_row || hi >= R) throw std::out_of_range("divergence_probe: test function support leaves (0, T)");
            for (int i = 0; i < X; ++i) {
                double a = 0, b = 0, c = 0;
                for (int r = lo; r <= hi; ++r) {
                    const double wt = psi.time_factor(p.u.time(r));
                    const double* v = &proj[(static_cast<std::size_t>(r) * X + i) * 3];
                    a += wt * v[0];
                    b += wt * v[1];
                    c += wt * v[2];
                }
                row.first = std::max(row.first, std::abs(a * cell));
                row.second = std::max(row.second, std::abs(b * cell));
                row.first_renormalised = std::max(row.first_renormalised, std::abs((a - c1 * c) * cell));
                row.second_renormalised = std::max(row.second_renormalised, std::abs((b - c2 * c) * cell));
            }
        }
        rows.push_back(row);
    }
    return rows;
}

double relative_spread(const std::vector<double>& v)
{
    if (v.empty()) return 0;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return (*hi - *lo) / *lo;
}

bool increasing(const std::vector<double>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return true;
}

} // namespace sheito
