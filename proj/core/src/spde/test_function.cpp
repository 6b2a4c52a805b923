#include "sheito/spde/test_function.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace sheito {

namespace {

// b and its first two derivatives on |r| < 1
struct Bump {
    double v, d1, d2;
};

Bump bump(double r)
{
    if (std::abs(r) >= 1) return {0, 0, 0};
    const double s = 1 - r * r;
    const double v = std::exp(-1 / s);
    const double g = -2 * r / (s * s); // (log b)'
    const double gp = -2 / (s * s) - 8 * r * r / (s * s * s);
    return {v, v * g, v * (g * g + gp)};
}

// o(r) = r b(r)
Bump odd(double r)
{
    const Bump b = bump(r);
    return {r * b.v, b.v + r * b.d1, 2 * b.d1 + r * b.d2};
}

Bump space(double r, TestFunction::Parity p) { return p == TestFunction::Parity::Even ? bump(r) : odd(r); }

double wrap(double d)
{
    d -= std::floor(d + 0.5);
    return d;
}

} // namespace

const std::array<double, 6>& TestFunction::derivative_bounds(Parity parity)
{
    auto table = [](Parity p) {
        // separable profile: sup over r of |b^(i)(4t)| 4^i and |b^(j)(2x)| 2^j
        std::array<double, 3> bt{}, bx{};
        for (int i = 0; i <= 20000; ++i) {
            const Bump b = bump(-1 + i * 1e-4), o = space(-1 + i * 1e-4, p);
            bt = {std::max(bt[0], std::abs(b.v)), std::max(bt[1], 4 * std::abs(b.d1)), std::max(bt[2], 16 * std::abs(b.d2))};
            bx = {std::max(bx[0], std::abs(o.v)), std::max(bx[1], 2 * std::abs(o.d1)), std::max(bx[2], 4 * std::abs(o.d2))};
        }
        return std::array<double, 6>{bt[0] * bx[0], bt[1] * bx[0], bt[0] * bx[1], bt[2] * bx[0], bt[1] * bx[1], bt[0] * bx[2]};
    };
    static const std::array<double, 6> even = table(Parity::Even), odd_bounds = table(Parity::Odd);
    return parity == Parity::Even ? even : odd_bounds;
}

double TestFunction::normalisation(Parity parity)
{
    auto norm = [](Parity p) {
        double m = 0;
        for (double b : derivative_bounds(p)) m = std::max(m, b);
        return m;
    };
    static const double even = norm(Parity::Even), odd_norm = norm(Parity::Odd);
    return parity == Parity::Even ? even : odd_norm;
}

double TestFunction::profile(double t, double x, Parity parity)
{
    return bump(4 * t).v * space(2 * x, parity).v / normalisation(parity);
}

TestFunction::TestFunction(double t, double x, double lambda, Parity parity)
    : t_(t), x_(x), lambda_(lambda), parity_(parity)
{
    if (!(lambda > 0) || lambda > 1) throw std::invalid_argument("TestFunction: lambda must lie in (0, 1]");
}

double TestFunction::time_factor(double s) const
{
    const double l2 = lambda_ * lambda_;
    return bump(4 * (s - t_) / l2).v / (normalisation(parity_) * l2);
}

double TestFunction::space_factor(double y) const { return space(2 * wrap(y - x_) / lambda_, parity_).v / lambda_; }

double TestFunction::dt(double s, double y) const
{
    const double l2 = lambda_ * lambda_;
    return 4 * bump(4 * (s - t_) / l2).d1 * space(2 * wrap(y - x_) / lambda_, parity_).v / normalisation(parity_) / (l2 * l2 * lambda_);
}

double TestFunction::dx(double s, double y) const
{
    const double l2 = lambda_ * lambda_;
    return 2 * bump(4 * (s - t_) / l2).v * space(2 * wrap(y - x_) / lambda_, parity_).d1 / normalisation(parity_) / (l2 * l2);
}

double TestFunction::dxx(double s, double y) const
{
    const double l2 = lambda_ * lambda_;
    return 4 * bump(4 * (s - t_) / l2).v * space(2 * wrap(y - x_) / lambda_, parity_).d2 / normalisation(parity_) / (l2 * l2 * lambda_);
}

double pair(const GridField& f, const TestFunction& psi)
{
    const TorusGrid& g = f.grid();
    const int lo = static_cast<int>(std::floor((psi.t() - psi.time_radius() - g.t0) / g.dt)) - f.first();
    const int hi = static_cast<int>(std::ceil((psi.t() + psi.time_radius() - g.t0) / g.dt)) - f.first();
    if (lo < 0 || hi >= f.rows()) throw std::out_of_range("pair: test function support leaves the field's time range");
    const int jc = static_cast<int>(std::lround(psi.x() * g.M));
    int jr = static_cast<int>(std::ceil(psi.space_radius() * g.M)) + 1;
    if (2 * jr + 1 > g.M) jr = g.M / 2; // whole circle
    const int j_end = 2 * jr + 1 > g.M ? jc + jr - 1 : jc + jr;
    double s = 0;
    for (int r = lo; r <= hi; ++r) {
        const double tr = f.time(r);
        for (int j = jc - jr; j <= j_end; ++j) {
            const double y = static_cast<double>(j) / g.M;
            s += f.at(r, j) * psi(tr, y);
        }
    }
    return s * g.dt * g.dx();
}

} // namespace sheito
