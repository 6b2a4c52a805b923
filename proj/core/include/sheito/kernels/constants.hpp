#pragma once

#include "sheito/kernels/heat.hpp"
#include "sheito/kernels/mollifier.hpp"

#include <stdexcept>

namespace sheito {

struct ResolutionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A = integral of G (rho * rho) and B = integral of (G_x * rho)^2, by two unrelated
// Fourier-side quadratures, each also at doubled resolution as a self-check.
struct AsymptoticTargets {
    double A = 0, B = 0;
    double A_refined = 0, B_refined = 0;
    double relative_gap() const { return std::abs(A - B) / A; }
};

double target_A(const Mollifier& m, const QuadratureSpec& q = {});
double target_B(const Mollifier& m, const QuadratureSpec& q = {});
AsymptoticTargets asymptotic_targets(const Mollifier& m = {}, const QuadratureSpec& q = {});

struct RenormalisationConstants {
    double eps = 0;
    double c1_direct = 0, c1_rescaled = 0;
    double c2_direct = 0, c2_rescaled = 0;
    double c2_correction = 0; // integral of (G_x + K_x)(R_x * rho_eps * rho_eps)
    double c1() const { return c1_direct; }
    double c2() const { return c2_direct; }
};

// C1 = integral rho_eps (K * rho_eps), directly in (t, x) and in the rescaled form
// integral S_eps K (rho * rho). Throws ResolutionError if q.step > eps / 8.
std::pair<double, double> constant_C1(double eps, const Mollifier& m = {}, const CutoffKernel& k = {},
                                      const QuadratureSpec& q = {});

// C2 = integral (K_x * rho_eps)^2. With K_x = G_x - R_x and exact parabolic scaling of the
// G_x part: C2 = B / eps - integral (G_x + K_x)(R_x * rho_eps * rho_eps).
RenormalisationConstants renormalisation_constants(double eps, double B, const Mollifier& m = {},
                                                   const CutoffKernel& k = {}, const QuadratureSpec& q = {});

// Both sides of 2 (G_x * G_x(-.))(z) = G(z) + G(-z) at z = (t, x), z != 0.
struct KernelIdentity {
    double t, x;
    double lhs, rhs;
    double residual() const { return std::abs(lhs - rhs); }
};

KernelIdentity kernel_identity(double t, double x);

} // namespace sheito
