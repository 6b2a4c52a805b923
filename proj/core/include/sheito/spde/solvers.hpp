#pragma once

#include "sheito/kernels/constants.hpp"
#include "sheito/kernels/mollifier.hpp"
#include "sheito/spde/noise.hpp"
#include "sheito/spde/nonlinearity.hpp"

namespace sheito {

enum class ConvolutionMethod {
    ExactOu, // per-mode exact Ornstein-Uhlenbeck update, exact in law at the nodes
    Duhamel, // left-point Duhamel sum against the band-limited P: u(t_n) = sum_{m<n} P_{t_n - t_m} dW_m
};

// u = P * xi with zero initial data at the draw's t0; rows are the grid nodes 0..steps.
SpectralField stochastic_convolution(const WhiteNoiseDraw& draw, ConvolutionMethod m = ConvolutionMethod::ExactOu);

// xi_eps = rho_eps * xi at the grid nodes whose mollifier support lies inside the draw window:
// xi_eps(t_n, .)^_k = q^(2 pi eps k) sum_m w_m dW_m(k) / dt with taps w_m proportional to p_eps(t_n - s_m),
// s_m the cell midpoints, normalised to unit sum.
// Throws ResolutionError unless eps >= 4 dx and dt <= eps^2 / 16.
SpectralField mollify_noise(const WhiteNoiseDraw& draw, double eps, const Mollifier& rho = {});
// Unnormalised time mass sum_m p_eps(t - s_m) dt of the mollifier taps.
double mollifier_time_mass(double eps, double dt, const Mollifier& rho = {});

// Solves (d_t - d_xx) u = 1_{t >= t_s} zeta with u = 0 up to row `start`, using the exponential
// integrator that is exact for zeta piecewise linear in time between rows.
SpectralField solve_u_eps(const SpectralField& zeta, int start = 0);

// phi'(u) xi - phi''(u) (d_x u)^2, the classical chain-rule right-hand side of (d_t - d_xx) phi(u).
GridField chain_rule_field(const Nonlinearity& phi, const GridField& u, const GridField& u_x, const GridField& xi);

// Restricts a field to rows [first, first + rows) of its own row range.
GridField slice_rows(const GridField& f, int first, int rows);
SpectralField slice_rows(const SpectralField& f, int first, int rows);

} // namespace sheito
