#include "sheito/kernels/mollifier.hpp"

#include <cmath>

namespace sheito {

double Mollifier::bump(double r) { return std::abs(r) < 1 ? std::exp(-1 / (1 - r * r)) : 0.0; }

Mollifier::Mollifier() : z_(composite_gl(bump, -1.0, 1.0, 16, 16)) {}

double Mollifier::p(double t) const { return 4 * bump(4 * t) / z_; }
double Mollifier::q(double x) const { return 2 * bump(2 * x) / z_; }

double Mollifier::rho_eps(double eps, double t, double x) const
{
    return (*this)(t / (eps * eps), x / eps) / (eps * eps * eps);
}

double Mollifier::p2(double t) const
{
    const double r = t_radius();
    const double lo = std::max(-r, t - r), hi = std::min(r, t + r);
    if (hi <= lo) return 0;
    return composite_gl([&](double s) { return p(s) * p(t - s); }, lo, hi, 8, 16);
}

double Mollifier::q2(double x) const
{
    const double r = x_radius();
    const double lo = std::max(-r, x - r), hi = std::min(r, x + r);
    if (hi <= lo) return 0;
    return composite_gl([&](double y) { return q(y) * q(x - y); }, lo, hi, 8, 16);
}

double Mollifier::q_hat(double k) const
{
    // enough panels to follow cos(k x) across the support
    const int panels = 8 + static_cast<int>(std::abs(k) / 4);
    return 2 * composite_gl([&](double x) { return q(x) * std::cos(k * x); }, 0.0, x_radius(), panels, 16);
}

double Mollifier::mass() const
{
    const double mt = composite_gl([&](double t) { return p(t); }, -t_radius(), t_radius(), 16, 16);
    const double mx = composite_gl([&](double x) { return q(x); }, -x_radius(), x_radius(), 16, 16);
    return mt * mx;
}

Mollifier::Nodes Mollifier::self_convolution_nodes(double eps, int nt, int nx) const
{
    const NodeSet ts = composite_nodes(-2 * t_radius(), 2 * t_radius(), 1, nt);
    const NodeSet xs = composite_nodes(-2 * x_radius(), 2 * x_radius(), 1, nx);
    Nodes out;
    double total = 0;
    for (std::size_t i = 0; i < ts.x.size(); ++i) {
        const double wt = ts.w[i] * p2(ts.x[i]);
        for (std::size_t j = 0; j < xs.x.size(); ++j) {
            const double w = wt * xs.w[j] * q2(xs.x[j]);
            out.t.push_back(eps * eps * ts.x[i]);
            out.x.push_back(eps * xs.x[j]);
            out.w.push_back(w);
            total += w;
        }
    }
    for (double& w : out.w) w /= total;
    return out;
}

} // namespace sheito
