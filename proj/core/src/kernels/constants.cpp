#include "sheito/kernels/constants.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace sheito {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLayer = 40.0; // exp(-40): where an exponential layer is cut

void check_resolution(double eps, const QuadratureSpec& q)
{
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    if (q.step > eps / 8)
        throw ResolutionError("resolution too coarse: step " + std::to_string(q.step) + " > eps/8 = " +
                              std::to_string(eps / 8));
}

} // namespace

double target_A(const Mollifier& m, const QuadratureSpec& q)
{
    // A = (1/pi) int_0^inf qhat(k)^2 int_0^{1/2} P2(t) exp(-t k^2) dt dk
    auto inner = [&](double k) {
        const double len = std::min(2 * Mollifier::t_radius(), kLayer / (k * k));
        const int panels = std::max(4, static_cast<int>(std::ceil(len * 64)));
        return composite_gl([&](double t) { return m.p2(t) * std::exp(-t * k * k); }, 0.0, len, panels, q.order);
    };
    auto f = [&](double k) {
        const double qh = m.q_hat(k);
        return qh * qh * inner(k);
    };
    return composite_gl(f, 0.0, q.k_max, q.k_panels, q.order) / kPi;
}

double target_B(const Mollifier& m, const QuadratureSpec& q)
{
    // B = (1/pi) int_0^inf k^2 qhat^2 [int_{-1/4}^{1/4} F(t,k)^2 dt + F(1/4,k)^2 / (2k^2)] dk,
    // F(t, k) = int_{-1/4}^t p(s) exp(-(t - s) k^2) ds the Fourier transform of G_x * rho / (ik qhat).
    const double r = Mollifier::t_radius();
    auto F = [&](double t, double k) {
        const double len = std::min(t + r, kLayer / (k * k));
        if (len <= 0) return 0.0;
        const int panels = std::max(1, static_cast<int>(std::ceil(len * 64)));
        return composite_gl([&](double s) { return m.p(t - s) * std::exp(-s * k * k); }, 0.0, len, panels, q.order);
    };
    auto f = [&](double k) {
        const double qh = m.q_hat(k);
        const double inside = composite_gl(
            [&](double t) {
                const double v = F(t, k);
                return v * v;
            },
            -r, r, 64, q.order);
        const double end = F(r, k);
        return qh * qh * (k * k * inside + end * end / 2);
    };
    return composite_gl(f, 0.0, q.k_max, q.k_panels, q.order) / kPi;
}

AsymptoticTargets asymptotic_targets(const Mollifier& m, const QuadratureSpec& q)
{
    AsymptoticTargets out;
    out.A = target_A(m, q);
    out.B = target_B(m, q);
    const QuadratureSpec r = q.refined();
    out.A_refined = target_A(m, r);
    out.B_refined = target_B(m, r);
    return out;
}

std::pair<double, double> constant_C1(double eps, const Mollifier& m, const CutoffKernel& kern,
                                      const QuadratureSpec& q)
{
    check_resolution(eps, q);
    const double e2 = eps * eps;
    // Inner x-integral against a spatial profile, with x = sqrt(t) u resolving the Gaussian.
    auto inner = [&](double t, double support, auto&& weight, auto&& kernel) {
        const double L = std::min(14.0, support / std::sqrt(t));
        return composite_gl(
            [&](double u) {
                const double x = std::sqrt(t) * u;
                return kernel(t, x) * std::sqrt(t) * weight(x);
            },
            -L, L, 28, q.order);
    };
    // direct: physical coordinates, one panel per mollifier step
    const int panels = 4 * static_cast<int>(std::ceil(eps / q.step));
    const double direct = composite_gl(
        [&](double t) {
            auto w = [&](double x) { return m.q2(x / eps) / eps; };
            auto k = [&](double tt, double x) { return kern.K(tt, x); };
            return m.p2(t / e2) / e2 * inner(t, 2 * eps * Mollifier::x_radius(), w, k);
        },
        0.0, 2 * Mollifier::t_radius() * e2, panels, q.order);
    // rescaled: integral of eps K(eps^2 t, eps x) (rho * rho)(t, x) on the unit scale
    const double rescaled = composite_gl(
        [&](double t) {
            auto w = [&](double x) { return m.q2(x); };
            auto k = [&](double tt, double x) { return eps * kern.K(e2 * tt, eps * x); };
            return m.p2(t) * inner(t, 2 * Mollifier::x_radius(), w, k);
        },
        0.0, 2 * Mollifier::t_radius(), 32, q.order + 2);
    return {direct, rescaled / eps};
}

namespace {

// Integral over t > 0 of (G_x + K_x)(R_x * rho_eps * rho_eps), split at t1 beyond which
// K = 0 and R = G on the whole mollifier window; that part is closed in Fourier variables.
double c2_correction(double eps, const Mollifier& m, const CutoffKernel& kern, const QuadratureSpec& q,
                     bool rescaled)
{
    const double e2 = eps * eps;
    const double t0 = 1e-3;
    const double t1 = ParabolicCutoff::time_extent() + e2 * 2 * Mollifier::t_radius();
    const int order = rescaled ? q.order + 2 : q.order;
    const int t_panels = rescaled ? q.t_panels * 5 / 4 : q.t_panels;
    const double reach = std::sqrt(e2 * 2 * Mollifier::t_radius()) + eps * 2 * Mollifier::x_radius();
    const auto nodes = m.self_convolution_nodes(eps);
    // x-panels follow the Gaussian width sqrt(t) but stay below the cutoff's transition scale
    auto panel_width = [&](double t) { return std::min(std::max(q.x_panel, std::sqrt(t) / 6), 0.1); };

    // physical-coordinate integrand; the rescaled variant integrates it in t' = t/eps^2, x' = x/eps
    // with its own (finer) panel layout
    auto integrand = [&](double t, double x) {
        if (std::sqrt(t) + x + reach < ParabolicCutoff::inner_radius()) return 0.0; // R_x = 0 on the window
        double b2 = 0;
        for (std::size_t j = 0; j < nodes.w.size(); ++j) b2 += nodes.w[j] * kern.R_x(t - nodes.t[j], x - nodes.x[j]);
        return (heat_kernel_dx(t, x) + kern.K_x(t, x)) * b2;
    };
    double near = 0;
    if (!rescaled) {
        near = composite_gl(
            [&](double t) {
                const double X = std::sqrt(80 * t) + 1.1;
                const int xp = std::max(1, static_cast<int>(std::ceil(X / panel_width(t))));
                return 2 * composite_gl([&](double x) { return integrand(t, x); }, 0.0, X, xp, order);
            },
            t0, t1, t_panels, order);
    } else {
        const double T0 = t0 / e2, T1 = t1 / e2;
        near = composite_gl(
            [&](double tp) {
                const double X = (std::sqrt(80 * e2 * tp) + 1.1) / eps;
                const int xp = std::max(1, static_cast<int>(std::ceil(X * eps / panel_width(e2 * tp))));
                return 2 * composite_gl(
                               [&](double xp_) {
                                   // dt dx = eps^3 dt' dx'
                                   return integrand(e2 * tp, eps * xp_) * eps * eps * eps;
                               },
                               0.0, X, xp, order);
            },
            T0, T1, t_panels, order);
    }
    // far part: (1/2pi) int_0^inf qhat(eps k)^2 M(k) exp(-2 t1 k^2) dk, M(k) = int P2(s) e^{eps^2 s k^2} ds
    auto M = [&](double k) {
        return composite_gl([&](double s) { return m.p2(s) * std::exp(e2 * s * k * k); }, -2 * Mollifier::t_radius(),
                            2 * Mollifier::t_radius(), 8, q.order);
    };
    const double kmax = std::sqrt(kLayer / (2 * t1));
    const double far = composite_gl(
                           [&](double k) {
                               const double qh = m.q_hat(eps * k);
                               return qh * qh * M(k) * std::exp(-2 * t1 * k * k);
                           },
                           0.0, kmax, 32, q.order) /
                       (2 * kPi);
    return near + far;
}

} // namespace

RenormalisationConstants renormalisation_constants(double eps, double B, const Mollifier& m, const CutoffKernel& k,
                                                   const QuadratureSpec& q)
{
    RenormalisationConstants out;
    out.eps = eps;
    std::tie(out.c1_direct, out.c1_rescaled) = constant_C1(eps, m, k, q);
    const double corr = c2_correction(eps, m, k, q, false);
    const double corr_r = c2_correction(eps, m, k, q, true);
    out.c2_correction = corr;
    out.c2_direct = B / eps - corr;
    out.c2_rescaled = B / eps - corr_r;
    return out;
}

KernelIdentity kernel_identity(double t, double x)
{
    if (t == 0 && x == 0) throw std::invalid_argument("kernel_identity: z must be nonzero");
    using boost::math::quadrature::exp_sinh;
    using boost::math::quadrature::gauss_kronrod;
    // 2 int_{s < min(t, 0)} int_y G_x(t - s, x - y) G_x(-s, -y) dy ds; with s = m - sigma the
    // narrower factor has time sigma, and y is scaled to its width.
    const double mt = std::min(t, 0.0);
    auto inner = [&](double sigma) {
        const double a = t - mt + sigma, b = -mt + sigma;
        const double r = std::sqrt(sigma);
        auto f = [&](double u) {
            if (b <= a) {
                const double y = r * u; // G_x(b, -y) narrow
                return heat_kernel_dx(a, x - y) * heat_kernel_dx(b, -y) * r;
            }
            const double y = x - r * u; // G_x(a, x - y) narrow
            return heat_kernel_dx(a, r * u) * heat_kernel_dx(b, -y) * r;
        };
        return gauss_kronrod<double, 61>::integrate(f, -14.0, 14.0, 12, 1e-13);
    };
    exp_sinh<double> outer;
    const double integral = outer.integrate(inner, 1e-11);
    return {t, x, 2 * integral, heat_kernel(t, x) + heat_kernel(-t, -x)};
}

} // namespace sheito
