#pragma once

#include "sheito/model/modelled.hpp"
#include "sheito/spde/test_function.hpp"

#include <vector>

namespace sheito {

struct ModelBoundLevel {
    double lambda;
    double sup;   // sup over the sample points and both test parities of |(Pi^_z tau)(eta_z^lambda)|
    double ratio; // sup / lambda^|tau|
};

struct ModelBoundReport {
    Symbol tau;
    double homogeneity; // |tau| at the context's kappa
    std::vector<ModelBoundLevel> levels;
    double slope; // least-squares slope of log sup against log lambda
};

// Scaling of the (renormalised, if the context is) model on tau. Requires at least 4 levels, each
// resolved by the grid (lambda / 2 >= 4 dx and lambda^2 / 4 >= 4 dt; else ResolutionError), and
// test-function supports inside the window.
ModelBoundReport model_bound_probe(const ModelContext& ctx, const Symbol& tau, const std::vector<double>& lambdas,
                                   const std::vector<GridPoint>& points);
// Dyadic levels 2^-1, ..., 2^-n.
std::vector<double> dyadic_levels(int n);
// Points (t, x) on a rows-by-columns lattice of the window rows [r0, r1] and all columns.
std::vector<GridPoint> sample_points(const ModelContext& ctx, int r0, int r1, int times, int columns);

struct ItoResidual {
    double lhs;            // <(d_t - d_xx) phi(u), psi>
    double first_rough;    // <R^(Phi'(U) Xi), psi>
    double second_rough;   // <R^(Phi''(U) (D_x U)^2), psi>
    double counterterm;    // (C1 - C2) <phi''(u), psi>
    double residual;       // lhs - first + second - counterterm
    double reference;      // |<phi'(u) xi, psi>|
    double relative() const { return std::abs(residual) / reference; }
};

// Weak-form defect of the renormalised chain rule
//   (d_t - d_xx) phi(u) = R^(Phi'(U) Xi) - R^(Phi''(U) (D_x U)^2) + phi''(u) (C1 - C2)
// for the smooth solution u of the model's noise. d_t is a central difference, d_xx spectral.
// Throws std::invalid_argument if psi's support reaches the first or last row, or the origin.
ItoResidual pathwise_ito_residual(const Nonlinearity& phi, const ModelContext& ctx, const TestFunction& psi);
std::vector<ItoResidual> pathwise_ito_residual(const Nonlinearity& phi, const ModelContext& ctx,
                                               const std::vector<TestFunction>& psis);

} // namespace sheito
