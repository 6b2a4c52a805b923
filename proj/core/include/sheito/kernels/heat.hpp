#pragma once

#include "sheito/structure/symbol.hpp"

#include <vector>

namespace sheito {

// Heat kernel of d_t - d_x^2 on R: G(t, x) = exp(-x^2 / 4t) / sqrt(4 pi t) for t > 0, else 0.
double heat_kernel(double t, double x);
double heat_kernel_dx(double t, double x);
double heat_kernel_dxx(double t, double x); // = d_t G for t > 0

// Parabolic norm |t|^(1/2) + |x|.
double parabolic_norm(double t, double x);

// Smooth cutoff chi(t, x) = theta(n(t, x)) with the corner-smoothed parabolic norm
// n = (t^2 + d^4)^(1/4) - d + (x^2 + d^2)^(1/2) - d, d = 1/20, which satisfies
// |t|^(1/2) + |x| - 2d <= n <= |t|^(1/2) + |x|. theta = 1 on [0, 1/2] and 0 beyond 1 - 2d, so
// chi = 1 on the parabolic half-ball and vanishes outside the parabolic unit ball.
class ParabolicCutoff {
public:
    double operator()(double t, double x) const;
    double dx(double t, double x) const;
    double dt(double t, double x) const;
    static double gauge(double t, double x);
    static constexpr double smoothing() { return 0.05; }
    static double inner_radius() { return 0.5; }
    static double outer_radius() { return 1 - 2 * smoothing(); } // in the gauge n
    static double time_extent();                                  // chi(t, .) = 0 for |t| beyond this

private:
    static double theta(double r);
    static double theta_prime(double r);
};

// K = G chi (singular part) and R = G - K (smooth remainder, R = 0 near the origin).
class CutoffKernel {
public:
    double K(double t, double x) const;
    double K_x(double t, double x) const;
    double R(double t, double x) const;
    double R_x(double t, double x) const;
    const ParabolicCutoff& cutoff() const { return chi_; }

private:
    ParabolicCutoff chi_;
};

struct MomentDefect {
    MultiIndex k; // Q(t, x) = t^k1 x^k2
    double value; // integral of K Q
};

// Integral of K against each monomial of parabolic degree below max_degree. The cutoff
// kernel carries no moment correction, so the k = 0 entry is nonzero.
std::vector<MomentDefect> moment_defect(const CutoffKernel& k, double max_degree);

} // namespace sheito
