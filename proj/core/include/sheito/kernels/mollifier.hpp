#pragma once

#include "sheito/kernels/quadrature.hpp"

namespace sheito {

// rho(t, x) = p(t) q(x) with p(t) = 4 b(4t) / Z, q(x) = 2 b(2x) / Z, b(r) = exp(-1 / (1 - r^2)),
// Z = integral of b. Support |t| <= 1/4, |x| <= 1/2, hence inside the parabolic unit ball.
// rho_eps(t, x) = eps^-3 rho(t / eps^2, x / eps).
class Mollifier {
public:
    Mollifier();

    double operator()(double t, double x) const { return p(t) * q(x); }
    double rho_eps(double eps, double t, double x) const;
    double p(double t) const;
    double q(double x) const;
    // Self-convolutions p * p and q * q (the factors of rho * rho).
    double p2(double t) const;
    double q2(double x) const;
    // Fourier transform of q (real, even).
    double q_hat(double k) const;

    static double t_radius() { return 0.25; }
    static double x_radius() { return 0.5; }
    double bump_integral() const { return z_; }
    double mass() const; // numerical integral of rho

    // Tensor rule for rho_eps * rho_eps: nodes (t_i, x_j) with weights summing to 1.
    struct Nodes {
        std::vector<double> t, x, w;
    };
    Nodes self_convolution_nodes(double eps, int nt = 6, int nx = 8) const;

private:
    static double bump(double r);
    double z_;
};

} // namespace sheito
