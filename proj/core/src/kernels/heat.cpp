#include "sheito/kernels/heat.hpp"

#include "sheito/kernels/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace sheito {

double heat_kernel(double t, double x)
{
    if (t <= 0) return 0;
    return std::exp(-x * x / (4 * t)) / std::sqrt(4 * std::numbers::pi * t);
}

double heat_kernel_dx(double t, double x)
{
    if (t <= 0) return 0;
    return -x / (2 * t) * heat_kernel(t, x);
}

double heat_kernel_dxx(double t, double x)
{
    if (t <= 0) return 0;
    return (x * x / (4 * t * t) - 1 / (2 * t)) * heat_kernel(t, x);
}

double parabolic_norm(double t, double x) { return std::sqrt(std::abs(t)) + std::abs(x); }

double ParabolicCutoff::gauge(double t, double x)
{
    const double d = smoothing();
    return std::pow(t * t + d * d * d * d, 0.25) - d + std::sqrt(x * x + d * d) - d;
}

double ParabolicCutoff::time_extent()
{
    const double d = smoothing(), r = outer_radius() + d;
    return std::sqrt(r * r * r * r - d * d * d * d);
}

namespace {

double psi(double s) { return s > 0 ? std::exp(-1 / s) : 0.0; }
double psi_prime(double s) { return s > 0 ? std::exp(-1 / s) / (s * s) : 0.0; }

} // namespace

double ParabolicCutoff::theta(double r)
{
    const double a = inner_radius(), b = outer_radius();
    if (r <= a) return 1;
    if (r >= b) return 0;
    const double s = (r - a) / (b - a);
    const double f = psi(1 - s), g = psi(s);
    return f / (f + g);
}

double ParabolicCutoff::theta_prime(double r)
{
    const double a = inner_radius(), b = outer_radius();
    if (r <= a || r >= b) return 0;
    const double s = (r - a) / (b - a);
    const double f = psi(1 - s), g = psi(s);
    const double fp = -psi_prime(1 - s), gp = psi_prime(s);
    return (fp * (f + g) - f * (fp + gp)) / ((f + g) * (f + g)) / (b - a);
}

double ParabolicCutoff::operator()(double t, double x) const { return theta(gauge(t, x)); }

double ParabolicCutoff::dx(double t, double x) const
{
    const double n = gauge(t, x);
    if (n <= inner_radius() || n >= outer_radius()) return 0;
    const double d = smoothing();
    return theta_prime(n) * x / std::sqrt(x * x + d * d);
}

double ParabolicCutoff::dt(double t, double x) const
{
    const double n = gauge(t, x);
    if (n <= inner_radius() || n >= outer_radius()) return 0;
    const double d = smoothing();
    return theta_prime(n) * t / (2 * std::pow(t * t + d * d * d * d, 0.75));
}

double CutoffKernel::K(double t, double x) const { return t > 0 ? heat_kernel(t, x) * chi_(t, x) : 0.0; }

double CutoffKernel::K_x(double t, double x) const
{
    if (t <= 0) return 0;
    return heat_kernel_dx(t, x) * chi_(t, x) + heat_kernel(t, x) * chi_.dx(t, x);
}

double CutoffKernel::R(double t, double x) const { return t > 0 ? heat_kernel(t, x) * (1 - chi_(t, x)) : 0.0; }

double CutoffKernel::R_x(double t, double x) const
{
    if (t <= 0) return 0;
    return heat_kernel_dx(t, x) * (1 - chi_(t, x)) - heat_kernel(t, x) * chi_.dx(t, x);
}

std::vector<MomentDefect> moment_defect(const CutoffKernel& k, double max_degree)
{
    std::vector<MomentDefect> out;
    const double T = ParabolicCutoff::time_extent();
    for (int k1 = 0; 2 * k1 < max_degree; ++k1)
        for (int k2 = 0; 2 * k1 + k2 < max_degree; ++k2) {
            // x = sqrt(t) u resolves the Gaussian for small t; K vanishes for |x| > 2^(-3/4)
            auto inner = [&](double t) {
                const double L = std::min(14.0, (ParabolicCutoff::outer_radius() + 2 * ParabolicCutoff::smoothing()) / std::sqrt(t));
                auto f = [&](double u) {
                    const double x = std::sqrt(t) * u;
                    return k.K(t, x) * std::sqrt(t) * std::pow(x, k2);
                };
                return composite_gl(f, -L, L, 64, 8);
            };
            const double v = composite_gl([&](double t) { return std::pow(t, k1) * inner(t); }, 0.0, T, 96, 8);
            out.push_back({{k1, k2}, v});
        }
    return out;
}

} // namespace sheito
