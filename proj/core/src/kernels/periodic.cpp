#include "sheito/kernels/periodic.hpp"

#include "sheito/kernels/heat.hpp"
#include "sheito/kernels/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sheito {

namespace {

constexpr double kPi = std::numbers::pi;

// modes with exp(-4 pi^2 k^2 t) above 1e-18
int mode_count(double t) { return 1 + static_cast<int>(std::ceil(std::sqrt(41.5 / (4 * kPi * kPi * t)))); }

} // namespace

int image_count(double t) { return static_cast<int>(std::ceil(3 + 13 * std::sqrt(t))); }

double image_tail_bound(double t)
{
    // images beyond M sit at distance >= M - 1/2 >= 2.5 + 13 sqrt(t); Gaussian tail sum
    const int M = image_count(t);
    const double d = M - 0.5;
    return 2 * std::exp(-d * d / (4 * t)) / std::sqrt(4 * kPi * t) / (1 - std::exp(-d / (2 * t)));
}

double periodic_heat(double t, double x, PeriodicStrategy s)
{
    if (t <= 0) throw std::invalid_argument("periodic_heat: t must be positive");
    x -= std::floor(x);
    if (s == PeriodicStrategy::ImageSum) {
        const int M = image_count(t);
        double total = 0;
        for (int m = -M; m <= M; ++m) total += heat_kernel(t, x + m);
        return total;
    }
    const int K = mode_count(t);
    double total = 1;
    for (int k = K; k >= 1; --k) total += 2 * std::exp(-4 * kPi * kPi * k * k * t) * std::cos(2 * kPi * k * x);
    return total;
}

double periodic_heat_dx(double t, double x)
{
    if (t <= 0) throw std::invalid_argument("periodic_heat_dx: t must be positive");
    const int K = mode_count(t);
    double total = 0;
    for (int k = K; k >= 1; --k)
        total -= 4 * kPi * k * std::exp(-4 * kPi * kPi * k * k * t) * std::sin(2 * kPi * k * x);
    return total;
}

double trace_C(double s)
{
    if (!(s > 0)) throw std::invalid_argument("trace_C: s must be positive");
    return periodic_heat(2 * s, 0.0);
}

double trace_C_quadrature(double s)
{
    if (!(s > 0)) throw std::invalid_argument("trace_C_quadrature: s must be positive");
    // P_s is concentrated near 0 mod 1 with width sqrt(s): integrate over [-1/2, 1/2]
    const int panels = std::max(16, static_cast<int>(std::ceil(2 / std::sqrt(s))));
    return composite_gl(
        [&](double y) {
            const double v = periodic_heat(s, y, PeriodicStrategy::ImageSum);
            return v * v;
        },
        -0.5, 0.5, panels, 10);
}

double integrated_trace(double T)
{
    if (!(T > 0)) throw std::invalid_argument("integrated_trace: T must be positive");
    double tail = 0;
    const int K = mode_count(2 * T);
    for (int k = K; k >= 1; --k) tail += std::exp(-8 * kPi * kPi * double(k) * k * T) / (4 * kPi * kPi * double(k) * k);
    return T + 1.0 / 24 - tail;
}

} // namespace sheito
