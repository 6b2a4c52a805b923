#include "sheito/model/probes.hpp"

#include "sheito/kernels/constants.hpp"
#include "sheito/spde/solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace sheito {

std::vector<double> dyadic_levels(int n)
{
    std::vector<double> l;
    for (int i = 1; i <= n; ++i) l.push_back(std::ldexp(1.0, -i));
    return l;
}

std::vector<GridPoint> sample_points(const ModelContext& ctx, int r0, int r1, int times, int columns)
{
    std::vector<GridPoint> p;
    const int M = ctx.grid().M;
    for (int a = 0; a < times; ++a) {
        const int r = times == 1 ? (r0 + r1) / 2 : r0 + static_cast<int>(std::lround(double(a) * (r1 - r0) / (times - 1)));
        for (int b = 0; b < columns; ++b) p.push_back({r, b * M / columns});
    }
    return p;
}

ModelBoundReport model_bound_probe(const ModelContext& ctx, const Symbol& tau, const std::vector<double>& lambdas,
                                   const std::vector<GridPoint>& points)
{
    if (lambdas.size() < 4) throw std::invalid_argument("model_bound_probe: need at least 4 levels");
    if (points.empty()) throw std::invalid_argument("model_bound_probe: no sample points");
    const TorusGrid& g = ctx.grid();
    for (double l : lambdas)
        if (0.5 * l < 4 * g.dx() || 0.25 * l * l < 4 * g.dt)
            throw ResolutionError("model_bound_probe: lambda = " + std::to_string(l) + " below grid resolution");

    std::vector<std::pair<SectorForm, double>> terms;
    for (const auto& [s, c] : ctx.renormalised_expansion(tau)) {
        if (c == 0 || s.is_zero()) continue;
        const auto d = decompose(s);
        if (!d) throw std::invalid_argument("model_bound_probe: symbol not in T: " + s.str());
        terms.emplace_back(*d, c);
    }

    ModelBoundReport rep{tau, tau.homogeneity().at(to_double(ctx.kappa())), {}, 0};
    const int M = g.M;
    const double cell = g.dt * g.dx();
    for (double lambda : lambdas) {
        double sup = 0;
        for (const GridPoint& z : points)
            for (auto parity : {TestFunction::Parity::Even, TestFunction::Parity::Odd}) {
                const TestFunction psi(ctx.time(z.r), g.x(ctx.wrap_j(z.j)), lambda, parity);
                const int dr = static_cast<int>(std::ceil(psi.time_radius() / g.dt));
                const int dj = std::min(static_cast<int>(std::ceil(psi.space_radius() * M)), M / 2);
                if (z.r - dr < 0 || z.r + dr >= ctx.rows())
                    throw std::out_of_range("model_bound_probe: test function leaves the model window");
                std::vector<double> wx(2 * dj + 1);
                for (int b = -dj; b <= dj; ++b) wx[b + dj] = psi.space_factor(psi.x() + b * g.dx());
                double acc = 0;
                for (int r = z.r - dr; r <= z.r + dr; ++r) {
                    const double wt = psi.time_factor(ctx.time(r));
                    if (wt == 0) continue;
                    double row = 0;
                    for (int b = -dj; b <= dj; ++b) {
                        if (wx[b + dj] == 0) continue;
                        const GridPoint zb{r, z.j + b};
                        double v = 0;
                        for (const auto& [f, c] : terms) v += c * ctx.Pi_z(f, z, zb);
                        row += wx[b + dj] * v;
                    }
                    acc += wt * row;
                }
                sup = std::max(sup, std::abs(acc * cell));
            }
        rep.levels.push_back({lambda, sup, sup / std::pow(lambda, rep.homogeneity)});
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(rep.levels.size());
    for (const auto& l : rep.levels) {
        const double x = std::log(l.lambda), y = std::log(l.sup);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return rep;
}

namespace {

struct ItoFields {
    GridField lhs, first, second, phi2, chain;
};

// All fields on rows 1..rows-2 of the window (the central difference needs both neighbours).
ItoFields ito_fields(const Nonlinearity& phi, const ModelContext& ctx)
{
    if (ctx.rows() < 3) throw std::invalid_argument("pathwise_ito_residual: window needs at least 3 rows");
    const int n = ctx.rows() - 2;
    const GridField& u = ctx.u();
    const int M = ctx.grid().M;

    GridField phi_u = u;
    for (double& v : phi_u.values()) v = phi(v);
    const GridField phi_xx = dx(phi_u, 2);
    GridField lhs = slice_rows(phi_u, 1, n);
    const double h = ctx.grid().dt;
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < M; ++j) lhs(r, j) = (phi_u(r + 2, j) - phi_u(r, j)) / (2 * h) - phi_xx(r + 1, j);

    GridField first, second;
    {
        const ModelledField U = modelled_U_eps(ctx);
        const ModelledField Xi = lift_xi(ctx);
        const ModelledField DU = abstract_Dx(U);
        first = slice_rows(reconstruct(product_md(lift_composition(phi.derivative(1), U), Xi)), 1, n);
        second = slice_rows(reconstruct(product_md(lift_composition(phi.derivative(2), U), product_md(DU, DU))), 1, n);
    }
    GridField phi2 = slice_rows(u, 1, n), chain = phi2;
    const GridField xi = slice_rows(ctx.xi(), 1, n);
    for (std::size_t i = 0; i < phi2.values().size(); ++i) {
        const double v = phi2.values()[i];
        phi2.values()[i] = phi.derivative(2, v);
        chain.values()[i] = phi.derivative(1, v) * xi.values()[i];
    }
    return {std::move(lhs), std::move(first), std::move(second), std::move(phi2), std::move(chain)};
}

ItoResidual residual_of(const ItoFields& f, const ModelContext& ctx, const TestFunction& psi)
{
    const double lo = psi.t() - psi.time_radius(), hi = psi.t() + psi.time_radius();
    if (lo <= f.lhs.time(0) || hi >= f.lhs.time(f.lhs.rows() - 1) || lo <= ctx.time(ctx.origin_row()))
        throw std::invalid_argument("pathwise_ito_residual: test function support touches the window boundary");
    ItoResidual r{};
    r.lhs = pair(f.lhs, psi);
    r.first_rough = pair(f.first, psi);
    r.second_rough = pair(f.second, psi);
    r.counterterm = (ctx.c1() - ctx.c2()) * pair(f.phi2, psi);
    r.residual = r.lhs - r.first_rough + r.second_rough - r.counterterm;
    r.reference = std::abs(pair(f.chain, psi));
    return r;
}

} // namespace

ItoResidual pathwise_ito_residual(const Nonlinearity& phi, const ModelContext& ctx, const TestFunction& psi)
{
    return residual_of(ito_fields(phi, ctx), ctx, psi);
}

std::vector<ItoResidual> pathwise_ito_residual(const Nonlinearity& phi, const ModelContext& ctx,
                                               const std::vector<TestFunction>& psis)
{
    const ItoFields f = ito_fields(phi, ctx);
    std::vector<ItoResidual> out;
    for (const auto& psi : psis) out.push_back(residual_of(f, ctx, psi));
    return out;
}

} // namespace sheito
