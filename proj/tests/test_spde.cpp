#include "sheito/kernels/periodic.hpp"
#include "sheito/spde/chaos.hpp"
#include "sheito/spde/probes.hpp"
#include "sheito/spde/rng.hpp"
#include "sheito/spde/solvers.hpp"
#include "sheito/spde/test_function.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace sheito;

namespace {

// Kolmogorov-Smirnov p-value against N(0, 1) via the asymptotic series Q(sqrt(n) D).
double ks_normal_pvalue(std::vector<double> x)
{
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double F = 0.5 * std::erfc(-x[i] / std::numbers::sqrt2);
        d = std::max({d, (i + 1) / n - F, F - i / n});
    }
    const double z = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
    double q = 0;
    for (int k = 1; k <= 100; ++k) q += 2 * ((k % 2) ? 1 : -1) * std::exp(-2.0 * k * k * z * z);
    return std::clamp(q, 0.0, 1.0);
}

double mean(const std::vector<double>& v)
{
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

} // namespace

TEST_SUITE("philox")
{
    TEST_CASE("known-answer vectors")
    {
        using C = Philox4x32::Counter;
        CHECK(Philox4x32(Philox4x32::Key{0, 0})(C{0, 0, 0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
        CHECK(Philox4x32(Philox4x32::Key{0xffffffff, 0xffffffff})(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}) ==
              C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
        CHECK(Philox4x32(Philox4x32::Key{0xa4093822, 0x299f31d0})(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}) ==
              C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
    }

    TEST_CASE("normals are standard")
    {
        Philox4x32 g(7);
        std::vector<double> x;
        for (std::uint32_t i = 0; i < 5000; ++i) {
            auto [a, b] = g.normals({i, 0, 0, 0});
            x.push_back(a);
            x.push_back(b);
        }
        CHECK(std::abs(mean(x)) < 4 / std::sqrt(1e4));
        CHECK(ks_normal_pvalue(x) > 1e-3);
    }
}

TEST_SUITE("grid")
{
    TEST_CASE("fft round trip and spectral derivative")
    {
        const auto g = TorusGrid::over(32, 1e-3, 2e-3);
        GridField f(g);
        for (int r = 0; r < f.rows(); ++r)
            for (int j = 0; j < g.M; ++j) f(r, j) = std::sin(2 * std::numbers::pi * 3 * g.x(j)) + 0.5 + r;
        const GridField back = to_physical(to_spectral(f));
        for (std::size_t i = 0; i < f.values().size(); ++i) CHECK(back.values()[i] == doctest::Approx(f.values()[i]).epsilon(1e-13));
        const GridField d = dx(f, 2);
        for (int j = 0; j < g.M; ++j)
            CHECK(d(0, j) == doctest::Approx(-heat_rate(3) * std::sin(2 * std::numbers::pi * 3 * g.x(j))).epsilon(1e-10));
    }

    TEST_CASE("validation")
    {
        CHECK_THROWS(TorusGrid::over(48, 1e-3, 1).validate());
        CHECK_NOTHROW(TorusGrid::over(64, 1e-3, 1).validate());
        const auto g = TorusGrid::over(64, 0.5 / (64 * 64), 0.1);
        CHECK(g.finite_difference_stable());
        CHECK(g.T() >= 0.1);
    }
}

TEST_SUITE("white noise")
{
    TEST_CASE("physical cells are i.i.d. N(0, dt dx)")
    {
        const auto g = TorusGrid::over(64, 1e-3, 0.25);
        const auto draw = WhiteNoiseDraw::generate(g, 11, false);
        const GridField c = draw.cells_physical();
        std::vector<double> z;
        const double sd = std::sqrt(g.dt * g.dx());
        for (double v : c.values()) z.push_back(v / sd);
        const double n = static_cast<double>(z.size());
        REQUIRE(n >= 1e4);
        double s2 = 0;
        for (double v : z) s2 += v * v;
        CHECK(std::abs(s2 / n - 1) < 3 * std::sqrt(2 / n));
        CHECK(ks_normal_pvalue(z) > 1e-3);
        // neighbouring cells uncorrelated
        double cov = 0;
        for (int r = 0; r < c.rows(); ++r)
            for (int j = 0; j < g.M; ++j) cov += c(r, j) * c.at(r, j + 1) / (sd * sd);
        CHECK(std::abs(cov / n) < 4 / std::sqrt(n));
    }

    TEST_CASE("seeded and window-independent")
    {
        const auto g = TorusGrid::over(32, 1e-3, 0.05);
        const auto a = WhiteNoiseDraw::generate(g, 3), b = WhiteNoiseDraw::generate(g, 3), c = WhiteNoiseDraw::generate(g, 4);
        CHECK(a.increments()(10, 5) == b.increments()(10, 5));
        CHECK(a.increments()(10, 5) != c.increments()(10, 5));
        TorusGrid shifted = g;
        shifted.t0 = 0.02;
        const auto d = WhiteNoiseDraw::generate(shifted, 3);
        CHECK(std::abs(d.increments()(0, 5) - a.increments()(20, 5)) < 1e-15);
    }

    TEST_CASE("coarsening sums cells and keeps the cell variance")
    {
        const auto g = TorusGrid::over(64, 1e-3, 0.2);
        const auto fine = WhiteNoiseDraw::generate(g, 5);
        const auto coarse = fine.coarsen(2, 4);
        CHECK(coarse.grid().M == 32);
        CHECK(coarse.grid().dt == doctest::Approx(4e-3));
        for (int k : {0, 3, 10}) {
            std::complex<double> s = 0;
            for (int i = 0; i < 4; ++i) s += fine.increments()(4 * 7 + i, k);
            CHECK(std::abs(coarse.increments()(7, k) - s) < 1e-14);
        }
        const GridField c = coarse.cells_physical();
        double s2 = 0;
        for (double v : c.values()) s2 += v * v;
        const double n = static_cast<double>(c.values().size());
        CHECK(std::abs(s2 / n / (coarse.grid().dt * coarse.grid().dx()) - 1) < 4 * std::sqrt(2 / n));
    }

    TEST_CASE("OU innovations have the exact joint law")
    {
        const double lambda = heat_rate(3), dt = 1e-3;
        const auto o = OuStep::of(lambda, dt);
        CHECK(o.decay == doctest::Approx(std::exp(-lambda * dt)));
        CHECK(o.c == doctest::Approx((1 - std::exp(-lambda * dt)) / lambda));
        CHECK(o.v == doctest::Approx((1 - std::exp(-2 * lambda * dt)) / (2 * lambda)));
    }
}

TEST_SUITE("stochastic convolution")
{
    TEST_CASE("variance matches the integrated trace")
    {
        const int M = 32, N = 400;
        const auto g = TorusGrid::over(M, 0.5 / (M * M), 0.1);
        std::vector<double> ou, du;
        for (int seed = 0; seed < N; ++seed) {
            const auto d = WhiteNoiseDraw::generate(g, seed);
            for (auto [m, out] : {std::pair{ConvolutionMethod::ExactOu, &ou}, std::pair{ConvolutionMethod::Duhamel, &du}}) {
                const GridField u = to_physical(slice_rows(stochastic_convolution(d, m), g.steps, 1));
                for (int j = 0; j < M; j += 8) out->push_back(u(0, j) * u(0, j));
            }
        }
        // band-limited target: sum over |k| <= M/2 of (1 - e^{-2 lambda_k T}) / (2 lambda_k)
        double target = g.T();
        for (int k = 1; k <= M / 2; ++k) target += (k == M / 2 ? 1 : 2) * (1 - std::exp(-2 * heat_rate(k) * g.T())) / (2 * heat_rate(k));
        const double se = std::sqrt(2.0 / N) * target; // bound for 4 correlated sites per draw
        CHECK(std::abs(mean(ou) - target) < 3 * se);
        CHECK(std::abs(mean(du) - target) < 3 * se);
        CHECK(target == doctest::Approx(integrated_trace(g.T())).epsilon(0.05));
    }

    TEST_CASE("solve_u_eps is exact for a steady single mode")
    {
        const auto g = TorusGrid::over(16, 1e-3, 0.2);
        SpectralField z(g);
        for (int r = 0; r < z.rows(); ++r) z(r, 2) = 1.0;
        const SpectralField u = solve_u_eps(z);
        const double lam = heat_rate(2);
        for (int r : {1, 50, z.rows() - 1})
            CHECK(std::abs(u(r, 2) - (1 - std::exp(-lam * g.t(r))) / lam) < 1e-12);
        CHECK(std::abs(u(0, 2)) == 0);
    }

    TEST_CASE("mollifier taps")
    {
        for (double r : {16.0, 32.0}) CHECK(std::abs(mollifier_time_mass(0.1, 0.01 / r) - 1) < 1e-2);
        const auto g = TorusGrid::over(64, 0.1 * 0.1 / 16, 0.1);
        const auto d = WhiteNoiseDraw::generate(g, 1, false);
        CHECK_THROWS_AS(mollify_noise(d, 0.05), ResolutionError);
        const auto fine_t = WhiteNoiseDraw::generate(TorusGrid::over(64, 1e-5, 0.01), 1, false);
        CHECK_THROWS_AS(mollify_noise(fine_t, 0.06), ResolutionError);
        const SpectralField xi = mollify_noise(d, 0.1);
        CHECK(xi.rows() > 0);
        CHECK(xi.time(0) >= 0.1 * 0.1 / 4);
    }

    TEST_CASE("chain rule field")
    {
        const auto g = TorusGrid::over(8, 1e-3, 1e-3);
        GridField u(g), ux(g), xi(g);
        std::fill(u.values().begin(), u.values().end(), 0.3);
        std::fill(ux.values().begin(), ux.values().end(), 2.0);
        std::fill(xi.values().begin(), xi.values().end(), 5.0);
        const GridField c = chain_rule_field(Nonlinearity::sine(), u, ux, xi);
        CHECK(c(0, 0) == doctest::Approx(std::cos(0.3) * 5 + std::sin(0.3) * 4));
    }
}

TEST_SUITE("nonlinearity")
{
    TEST_CASE("derivative tables")
    {
        for (auto phi : {Nonlinearity::sine(), Nonlinearity::quadratic(), Nonlinearity::linear(2.0)})
            for (int n = 0; n + 1 < Nonlinearity::orders; ++n)
                for (double u : {-0.7, 0.2, 1.3}) {
                    const double h = 1e-5;
                    const double fd = (phi.derivative(n, u + h) - phi.derivative(n, u - h)) / (2 * h);
                    CHECK(fd == doctest::Approx(phi.derivative(n + 1, u)).epsilon(1e-6).scale(1));
                }
        const auto d2 = Nonlinearity::sine().derivative(2);
        CHECK(d2(0.4) == doctest::Approx(-std::sin(0.4)));
        CHECK(d2.derivative(1, 0.4) == doctest::Approx(-std::cos(0.4)));
        CHECK(Nonlinearity::by_name("quad")(3.0) == 9.0);
        CHECK_THROWS(Nonlinearity::by_name("cubic"));
    }
}

TEST_SUITE("chaos")
{
    TEST_CASE("I2(a (x) a) = I1(a)^2 - |a|^2")
    {
        const auto g = TorusGrid::over(8, 0.05, 0.2);
        auto a = [](double s, double y) { return std::cos(2 * std::numbers::pi * y) + s; };
        const auto f = ChaosKernel2::tabulate(g, [&](double s1, double y1, double s2, double y2) { return a(s1, y1) * a(s2, y2); });
        CHECK(f.symmetric());
        GridField integrand(g, 0, g.steps);
        double norm = 0;
        for (int n = 0; n < g.steps; ++n)
            for (int j = 0; j < g.M; ++j) {
                integrand(n, j) = a(g.t(n) + g.dt / 2, g.x(j));
                norm += integrand(n, j) * integrand(n, j) * g.dt * g.dx();
            }
        for (int seed : {1, 2, 3}) {
            const auto d = WhiteNoiseDraw::generate(g, seed, false);
            const double i1 = walsh_integral(integrand, d);
            CHECK(double_wiener_integral(f, d) == doctest::Approx(i1 * i1 - norm).epsilon(1e-12));
        }
    }

    TEST_CASE("double Wiener integral: mean 0, variance 2 |f|^2")
    {
        const auto g = TorusGrid::over(4, 0.1, 0.3);
        const auto f = ChaosKernel2::tabulate(g, [](double s1, double y1, double s2, double y2) {
            return std::exp(-(s1 - s2) * (s1 - s2)) * std::cos(2 * std::numbers::pi * (y1 - y2)) + 0.3;
        });
        const int N = 4000;
        std::vector<double> v;
        for (int seed = 0; seed < N; ++seed) v.push_back(double_wiener_integral(f, WhiteNoiseDraw::generate(g, seed, false)));
        const double m = mean(v);
        double s2 = 0;
        for (double x : v) s2 += (x - m) * (x - m);
        const double var = s2 / (N - 1), target = 2 * f.squared_norm();
        CHECK(std::abs(m) < 4 * std::sqrt(target / N));
        CHECK(var == doctest::Approx(target).epsilon(0.12));
        const auto asym = ChaosKernel2::tabulate(g, [](double s1, double, double, double) { return s1; });
        CHECK_THROWS(double_wiener_integral(asym, WhiteNoiseDraw::generate(g, 0, false)));
    }
}

TEST_SUITE("test functions")
{
    TEST_CASE("support and class B_2 bounds")
    {
        for (auto p : {TestFunction::Parity::Even, TestFunction::Parity::Odd}) {
            CHECK(TestFunction::profile(0.26, 0, p) == 0);
            CHECK(TestFunction::profile(0, 0.51, p) == 0);
            for (double b : TestFunction::derivative_bounds(p)) CHECK(b / TestFunction::normalisation(p) <= 1 + 1e-12);
            double m = 0;
            for (double t = -0.25; t <= 0.25; t += 0.005)
                for (double x = -0.5; x <= 0.5; x += 0.005) m = std::max(m, std::abs(TestFunction::profile(t, x, p)));
            CHECK(m <= 1);
        }
        CHECK(TestFunction::profile(0.1, 0.2, TestFunction::Parity::Odd) == doctest::Approx(-TestFunction::profile(0.1, -0.2, TestFunction::Parity::Odd)));
        CHECK_THROWS(TestFunction(0, 0, 1.5));
    }

    TEST_CASE("pairing scales like the profile mass")
    {
        const auto g = TorusGrid::over(256, 1e-5, 0.2);
        GridField one(g);
        std::fill(one.values().begin(), one.values().end(), 1.0);
        const double m1 = pair(one, TestFunction(0.1, 0.5, 0.4)), m2 = pair(one, TestFunction(0.1, 0.5, 0.2));
        CHECK(m1 == doctest::Approx(m2).epsilon(1e-6));
        GridField x(g);
        for (int r = 0; r < x.rows(); ++r)
            for (int j = 0; j < g.M; ++j) x(r, j) = g.x(j) - 0.5;
        const double o1 = pair(x, TestFunction(0.1, 0.5, 0.4, TestFunction::Parity::Odd));
        const double o2 = pair(x, TestFunction(0.1, 0.5, 0.2, TestFunction::Parity::Odd));
        CHECK(o1 == doctest::Approx(2 * o2).epsilon(1e-6));
        CHECK(std::abs(pair(x, TestFunction(0.1, 0.5, 0.4))) < 1e-12);
        CHECK_THROWS_AS(pair(one, TestFunction(0.199, 0.5, 0.4)), std::out_of_range);
    }

    TEST_CASE("derivatives")
    {
        const TestFunction psi(0.3, 0.4, 0.5, TestFunction::Parity::Odd);
        const double h = 1e-6, s = 0.31, y = 0.47;
        CHECK(psi.dt(s, y) == doctest::Approx((psi(s + h, y) - psi(s - h, y)) / (2 * h)).epsilon(1e-5));
        CHECK(psi.dx(s, y) == doctest::Approx((psi(s, y + h) - psi(s, y - h)) / (2 * h)).epsilon(1e-5));
        CHECK(psi.dxx(s, y) == doctest::Approx((psi.dx(s, y + h) - psi.dx(s, y - h)) / (2 * h)).epsilon(1e-5));
    }
}

TEST_SUITE("probes")
{
    TEST_CASE("quadratic variation of the mollified martingale")
    {
        const auto g = TorusGrid::over(128, 1e-4, 0.25);
        const auto u = stochastic_convolution(WhiteNoiseDraw::generate(g, 2));
        const auto rep = martingale_probe(u, 0.05, 0.5);
        CHECK(rep.expected == doctest::Approx(0.25 * trace_C(0.05)).epsilon(1e-12));
        CHECK(rep.initial == 0);
        CHECK(rep.relative_error() < 0.3);
    }

    TEST_CASE("integral Ito terms for u^2")
    {
        const auto g = TorusGrid::over(32, 0.5 / (32 * 32), 0.25);
        const auto t = ito_terms_quadratic(0.25, 0.5, WhiteNoiseDraw::generate(g, 1));
        CHECK(t.trace == doctest::Approx(integrated_trace(0.25)));
        CHECK(std::abs(t.residual()) < 0.5 * (std::abs(t.lhs) + t.trace));
        CHECK_THROWS(ito_terms_quadratic(0.25, 0.5, WhiteNoiseDraw::generate(g, 1, false)));
    }

    TEST_CASE("spread and monotonicity helpers")
    {
        CHECK(relative_spread({1.0, 1.2, 1.1}) == doctest::Approx(0.2));
        CHECK(increasing({1, 2, 3}));
        CHECK_FALSE(increasing({1, 1, 3}));
    }
}
