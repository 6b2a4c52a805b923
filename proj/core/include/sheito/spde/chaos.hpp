#pragma once

#include "sheito/spde/noise.hpp"

#include <functional>

namespace sheito {

// Symmetric kernel f((s1, y1), (s2, y2)) on pairs of noise cells, cell index c = n * M + j.
class ChaosKernel2 {
public:
    ChaosKernel2(TorusGrid g, std::vector<double> values); // dense cells x cells, row-major
    // Samples f at cell midpoints (t_n + dt/2, y_j).
    static ChaosKernel2 tabulate(const TorusGrid& g, const std::function<double(double, double, double, double)>& f);

    const TorusGrid& grid() const { return g_; }
    int cells() const { return n_; }
    double operator()(int a, int b) const { return v_[static_cast<std::size_t>(a) * n_ + b]; }
    bool symmetric(double tol = 0) const;
    double squared_norm() const; // sum f^2 (dt dx)^2

private:
    TorusGrid g_;
    int n_;
    std::vector<double> v_;
};

// sum_{a != b} f_ab dW_a dW_b + sum_a f_aa (dW_a^2 - dt dx). Throws for asymmetric f.
double double_wiener_integral(const ChaosKernel2& f, const WhiteNoiseDraw& draw);

// sum_{n, j} g_{n, j} dW_{n, j} for an integrand with one row per cell.
double walsh_integral(const GridField& integrand, const WhiteNoiseDraw& draw);

// Terms of the integral Ito formula for phi(u) = u^2 at (t, x) with x snapped to the grid:
//   lhs    = u(t, x)^2
//   walsh  = sum_n sum_j 2 Pbar_n(x - y_j) u(t_n, y_j) dW_{n, j}
//   trace  = int_0^t C(s) ds
//   chaos2 = I_2 of 2 int P_{t-s}(x - y) d_xP_{s-s1}(y - y1) d_xP_{s-s2}(y - y2) dy ds
// with Pbar_n the band-limited kernel averaged over the cell [t_n, t_{n+1}] in s. The
// double integral is evaluated through I_2(a (x) a) = I_1(a)^2 - |a|^2 with a the kernel of
// d_x u(s, y), i.e. chaos2 = sum_n dt sum_j dx 2 Pbar_n(x - y_j) ((d_x u)^2 - E (d_x u)^2)(t_n, y_j).
// The draw must start at t0 = 0 and carry OU innovations.
struct ItoTerms {
    double lhs = 0, walsh = 0, trace = 0, chaos2 = 0;
    double residual() const { return lhs - (walsh + trace - chaos2); }
};
ItoTerms ito_terms_quadratic(double t, double x, const WhiteNoiseDraw& draw);

} // namespace sheito
