#pragma once

namespace sheito {

// Heat kernel on the unit torus: P_t(x) = sum_m G_t(x + m) = sum_k exp(-4 pi^2 k^2 t) cos(2 pi k x).
enum class PeriodicStrategy { ImageSum, Spectral };

// Images |m| <= ceil(3 + 13 sqrt(t)); the neglected tail is below image_tail_bound(t).
int image_count(double t);
double image_tail_bound(double t);

double periodic_heat(double t, double x, PeriodicStrategy s = PeriodicStrategy::Spectral);
double periodic_heat_dx(double t, double x);

// C(s) = ||P_s||^2_{L^2(T)} = P_{2s}(0) = sum_k exp(-8 pi^2 k^2 s). Throws for s <= 0.
double trace_C(double s);
// The same by Gauss-Legendre quadrature of P_s(y)^2 over the torus.
double trace_C_quadrature(double s);
// int_0^T C(s) ds = T + 1/24 - sum_{k>=1} exp(-8 pi^2 k^2 T) / (4 pi^2 k^2).
double integrated_trace(double T);

} // namespace sheito
