#pragma once

#include "sheito/spde/nonlinearity.hpp"
#include "sheito/spde/solvers.hpp"
#include "sheito/spde/test_function.hpp"

#include <vector>

namespace sheito {

// Quadratic variation of the martingale W^eps_t(x) = u^eps_t(x) - int_0^t d_xx u^eps_s(x) ds, where
// u^eps_t = P_eps * u_t, realised on the grid nodes (trapezoid in time). Its expected value is
// T C(eps) with C(eps) = |P_eps|^2.
struct MartingaleReport {
    double eps = 0, x = 0, T = 0;
    double qv = 0, expected = 0;
    double initial = 0;      // u^eps(0, x)
    double sup_distance = 0; // max over nodes of |u^eps - u|
    double relative_error() const { return std::abs(qv - expected) / expected; }
};
MartingaleReport martingale_probe(const SpectralField& u, double eps, double x);

// Dual-norm proxies max_psi |<F, psi>| over a fixed family of B_2 test functions at one scale for
//   F1 = phi'(u_eps) xi_eps            and its renormalisation F1 - phi''(u_eps) C1,
//   F2 = phi''(u_eps) (d_x u_eps)^2    and its renormalisation phi''(u_eps) ((d_x u_eps)^2 - C2),
// with u_eps solving the heat equation driven by 1_{t >= 0} xi_eps, all eps from one draw.
struct DivergenceOptions {
    double lambda = 0.25;
    std::vector<double> t_centers{0.125, 0.1875};
    int x_centers = 8;
};
struct DivergenceRow {
    double eps = 0, c1 = 0, c2 = 0;
    double first = 0, second = 0;
    double first_renormalised = 0, second_renormalised = 0;
};
struct RenormalisationPair {
    double c1 = 0, c2 = 0;
};
// The draw must start before -eps^2/4 for the largest eps and extend past the family's support.
std::vector<DivergenceRow> divergence_probe(const Nonlinearity& phi, const std::vector<double>& eps_list,
                                            const std::vector<RenormalisationPair>& constants, const WhiteNoiseDraw& draw,
                                            const DivergenceOptions& opt = {});

// Relative spread (max - min) / min of a positive sequence, and strict monotone growth as listed.
double relative_spread(const std::vector<double>& v);
bool increasing(const std::vector<double>& v);

// Solution of the heat equation driven by 1_{t >= 0} xi_eps together with the fields the probes use.
struct SmoothPath {
    double eps = 0;
    GridField xi, u, u_x;
    int origin_row = 0; // row of t = 0
};
SmoothPath smooth_path(const WhiteNoiseDraw& draw, double eps, const Mollifier& rho = {});

} // namespace sheito
