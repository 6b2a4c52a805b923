#include "sheito/model/context.hpp"

#include "sheito/bphz/renormalisation.hpp"
#include "sheito/kernels/constants.hpp"
#include "sheito/spde/solvers.hpp"
#include "sheito/structure/structure_group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sheito {

namespace {

double wrap(double d) { return d - std::floor(d + 0.5); }

double ipow(double x, int n)
{
    double r = 1;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

std::shared_ptr<const GridField> keep(const GridField& f, const ModelOptions& opt)
{
    const int rows = opt.keep_rows < 0 ? f.rows() - opt.keep_first : opt.keep_rows;
    if (opt.keep_first == 0 && rows == f.rows()) return std::make_shared<const GridField>(f);
    return std::make_shared<const GridField>(slice_rows(f, opt.keep_first, rows));
}

} // namespace

double ModelContext::dx_between(GridPoint z, GridPoint zbar) const { return wrap(grid().x(zbar.j) - grid().x(z.j)); }

double ModelContext::root(Sector s, GridPoint z) const
{
    const int j = wrap_j(z.j);
    switch (s) {
    case Sector::Xi: return (*xi_)(z.r, j);
    case Sector::I1: return (*kx_)(z.r, j);
    case Sector::I1Squared: return (*kx_)(z.r, j) * (*kx_)(z.r, j);
    case Sector::U: return 1.0;
    }
    return 0;
}

double ModelContext::Pi_z(const SectorForm& f, GridPoint z, GridPoint zbar) const
{
    double v = root(f.sector, zbar);
    if (f.l.k1) v *= ipow(dt_between(z, zbar), f.l.k1);
    if (f.l.k2) v *= ipow(dx_between(z, zbar), f.l.k2);
    if (f.m) v *= ipow((*k_)(zbar.r, wrap_j(zbar.j)) - (*k_)(z.r, wrap_j(z.j)), f.m);
    return v;
}

double ModelContext::Pi_z(const Symbol& tau, GridPoint z, GridPoint zbar) const
{
    if (tau.is_zero()) return 0;
    const auto f = decompose(tau);
    if (!f) throw std::invalid_argument("Pi_z: symbol not in T: " + tau.str());
    return Pi_z(*f, z, zbar);
}

GridField ModelContext::root_field(Sector s) const
{
    switch (s) {
    case Sector::Xi: return *xi_;
    case Sector::I1: return *kx_;
    case Sector::I1Squared: {
        GridField f = *kx_;
        for (double& v : f.values()) v *= v;
        return f;
    }
    case Sector::U: break;
    }
    GridField f = *xi_;
    std::fill(f.values().begin(), f.values().end(), 1.0);
    return f;
}

std::array<double, 3> ModelContext::character(GridPoint z) const
{
    return {-time(z.r), -grid().x(wrap_j(z.j)), -(*k_)(z.r, wrap_j(z.j))};
}

std::array<double, 3> ModelContext::gamma_vz(GridPoint v, GridPoint z) const
{
    const auto fz = character(z), fv = character(v);
    return {fz[0] - fv[0], -dx_between(v, z), fz[2] - fv[2]};
}

double ModelContext::Pi_z_via_group(const Symbol& tau, GridPoint z, GridPoint zbar) const
{
    // base-point-free Pi of X^l I^m sigma at zbar, with zbar's x lifted next to z
    const double tbar = time(zbar.r), xbar = grid().x(wrap_j(z.j)) + dx_between(z, zbar);
    const auto f = character(z);
    double total = 0;
    for (const auto& [sigma, c] : gamma_action<double>(f, tau)) {
        const auto d = decompose(sigma);
        double v = root(d->sector, zbar) * ipow(tbar, d->l.k1) * ipow(xbar, d->l.k2);
        if (d->m) v *= ipow((*k_)(zbar.r, wrap_j(zbar.j)), d->m);
        total += c * v;
    }
    return total;
}

std::vector<std::pair<Symbol, double>> ModelContext::renormalised_expansion(const Symbol& tau) const
{
    if (m_) {
        auto it = m_->find(tau);
        if (it != m_->end()) return it->second;
    }
    if (!renormalised_) return {{tau, 1.0}};
    std::vector<std::pair<Symbol, double>> terms;
    for (const auto& [sigma, c] : evaluate(closed_form_M(tau), {{gen::C1, c1_}, {gen::C2, c2_}})) terms.emplace_back(sigma, c);
    return terms;
}

double ModelContext::Pi_hat_z(const Symbol& tau, GridPoint z, GridPoint zbar) const
{
    if (!renormalised_) return Pi_z(tau, z, zbar);
    double s = 0;
    for (const auto& [sigma, c] : renormalised_expansion(tau))
        if (c != 0) s += c * Pi_z(sigma, z, zbar);
    return s;
}

struct ModelBuilder {
    static ModelContext build(const SpectralField& xi_in, double eps, int origin, const ModelOptions& opt)
    {
        const TorusGrid& g = xi_in.grid();
        if (eps < 4 * g.dx()) throw ResolutionError("build_canonical_model: eps below 4 dx");
        if (origin < 0 || origin >= xi_in.rows()) throw std::out_of_range("build_canonical_model: origin row outside window");

        SpectralField zeta = xi_in;
        for (int r = 0; r <= origin; ++r)
            for (int k = 0; k < zeta.modes(); ++k) zeta(r, k) = 0;
        const SpectralField u = solve_u_eps(zeta, origin);
        const RemainderSpectrum spectrum(g.M / 2);
        const SpectralField rbar = remainder_convolution(zeta, origin, spectrum);

        ModelContext c;
        c.origin_ = origin - opt.keep_first;
        c.eps_ = eps;
        c.kappa_ = opt.kappa;
        c.basis_ = enumerate_basis(opt.zeta, opt.kappa);

        const GridField xi_p = to_physical(zeta), u_p = to_physical(u), ux_p = to_physical(dx_spectral(u, 1));
        const GridField r_p = to_physical(rbar), rx_p = to_physical(dx_spectral(rbar, 1));
        GridField k_p = u_p, kx_p = ux_p;
        for (std::size_t i = 0; i < k_p.values().size(); ++i) {
            k_p.values()[i] -= r_p.values()[i];
            kx_p.values()[i] -= rx_p.values()[i];
        }
        c.xi_ = keep(xi_p, opt);
        c.u_ = keep(u_p, opt);
        c.ux_ = keep(ux_p, opt);
        c.k_ = keep(k_p, opt);
        c.kx_ = keep(kx_p, opt);
        c.r_ = keep(r_p, opt);
        c.rx_ = keep(rx_p, opt);
        return c;
    }
};

ModelContext build_canonical_model(const SpectralField& xi, double eps, int origin, const ModelOptions& opt)
{
    return ModelBuilder::build(xi, eps, origin, opt);
}

ModelContext build_bphz_model(const ModelContext& canonical, double c1, double c2)
{
    ModelContext c = canonical;
    c.c1_ = c1;
    c.c2_ = c2;
    c.renormalised_ = true;
    auto m = std::make_shared<std::map<Symbol, std::vector<std::pair<Symbol, double>>>>();
    for (const Symbol& tau : c.basis_) {
        std::vector<std::pair<Symbol, double>> terms;
        for (const auto& [sigma, v] : evaluate(closed_form_M(tau), {{gen::C1, c1}, {gen::C2, c2}})) terms.emplace_back(sigma, v);
        (*m)[tau] = std::move(terms);
    }
    c.m_ = m;
    return c;
}

} // namespace sheito
