#pragma once

#include "sheito/spde/grid.hpp"

#include <array>

namespace sheito {

// eta(t, x) = b(4t) b(2x) / N with b(r) = exp(-1 / (1 - r^2)), supported in |t| < 1/4, |x| < 1/2
// (inside the parabolic unit ball). N is the largest sup-norm of eta's derivatives of order <= 2,
// tabulated once, so that every such derivative is bounded by 1 (class B_2).
// The odd variant replaces b(2x) by o(2x), o(r) = r b(r), so that it also sees odd local behaviour
// (it pairs to lambda against x - y where the even profile gives 0).
// The rescaled eta_z^lambda(s, y) = lambda^-3 eta((s - t) / lambda^2, (y - x) / lambda), periodic in y.
class TestFunction {
public:
    enum class Parity { Even, Odd };
    TestFunction(double t, double x, double lambda, Parity parity = Parity::Even);

    double t() const { return t_; }
    double x() const { return x_; }
    double lambda() const { return lambda_; }
    Parity parity() const { return parity_; }
    double time_radius() const { return 0.25 * lambda_ * lambda_; }
    double space_radius() const { return 0.5 * lambda_; }

    double operator()(double s, double y) const { return time_factor(s) * space_factor(y); }
    // Separable factors: psi(s, y) = time_factor(s) * space_factor(y).
    double time_factor(double s) const;
    double space_factor(double y) const;
    double dt(double s, double y) const;
    double dx(double s, double y) const;
    double dxx(double s, double y) const;

    static double profile(double t, double x, Parity parity = Parity::Even);
    static double normalisation(Parity parity = Parity::Even); // N above
    // Sup-norms of the unnormalised profile's derivatives: (0,0), (1,0), (0,1), (2,0), (1,1), (0,2).
    static const std::array<double, 6>& derivative_bounds(Parity parity = Parity::Even);

private:
    double t_, x_, lambda_;
    Parity parity_;
};

// Riemann sum sum_r dt sum_j dx f psi over the rows of f. Throws std::out_of_range if the
// support of psi reaches beyond the rows of f.
double pair(const GridField& f, const TestFunction& psi);

} // namespace sheito
