#pragma once

#include "sheito/model/remainder.hpp"
#include "sheito/spde/grid.hpp"
#include "sheito/structure/basis.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>

namespace sheito {

struct GridPoint {
    int r = 0; // row of the model window
    int j = 0; // spatial index, taken periodically
};

// Concrete model for a smooth noise realisation zeta = 1_{t > t_origin} xi_eps on a window of grid
// rows. Stored base-point-free, one field per sector root:
//   Pi Xi = zeta, Pi I(Xi) = K * zeta, Pi I_1(Xi) = d_x K * zeta,
// with K * zeta = P * zeta - Rbar * zeta. Recentred maps Pi_z = Pi Gamma_{f(z)} use the character
// f(z) = (-t, -x, -(K * zeta)(z)); x-differences are taken to the nearest periodic image.
// The renormalised model composes with M_eps: Pi^_z = Pi_z M_eps. Immutable once built.
class ModelContext {
public:
    const TorusGrid& grid() const { return xi_->grid(); }
    int rows() const { return xi_->rows(); }
    int origin_row() const { return origin_; }
    double time(int r) const { return xi_->time(r); }
    double eps() const { return eps_; }
    double c1() const { return c1_; }
    double c2() const { return c2_; }
    bool renormalised() const { return renormalised_; }
    const Rational& kappa() const { return kappa_; }
    const std::vector<Symbol>& basis() const { return basis_; }

    const GridField& xi() const { return *xi_; }
    const GridField& u() const { return *u_; }     // P * zeta = (K + Rbar) * zeta
    const GridField& K_xi() const { return *k_; }  // K * zeta
    const GridField& K_xi_x() const { return *kx_; }
    const GridField& R_xi() const { return *r_; }  // Rbar * zeta
    const GridField& R_xi_x() const { return *rx_; }
    const GridField& u_x() const { return *ux_; }
    double indicator(int r) const { return r > origin_ ? 1.0 : 0.0; } // 1_+ = 1_{t > t_origin}

    // Canonical base-point-free realisation of the sector root of tau at z.
    double root(Sector s, GridPoint z) const;
    // (Pi_z tau)(zbar), canonical, from the sector decomposition of tau.
    double Pi_z(const Symbol& tau, GridPoint z, GridPoint zbar) const;
    double Pi_z(const SectorForm& f, GridPoint z, GridPoint zbar) const;
    // Base-point-free field of a sector root over the window.
    GridField root_field(Sector s) const;
    // The same through the structure group: sum over Gamma_{f(z)} tau of the base-point-free Pi,
    // with x measured from z's periodic image nearest to zbar. Used to check the model axiom.
    double Pi_z_via_group(const Symbol& tau, GridPoint z, GridPoint zbar) const;
    // (Pi^_z tau)(zbar): Pi_z M_eps tau when renormalised, else Pi_z tau.
    double Pi_hat_z(const Symbol& tau, GridPoint z, GridPoint zbar) const;
    std::array<double, 3> character(GridPoint z) const; // f(z)
    // h with Pi_z = Pi_v Gamma_h for nearby points: h = f(z) - f(v) (x-component wrapped).
    std::array<double, 3> gamma_vz(GridPoint v, GridPoint z) const;

    // M_eps tau as numeric coefficients (identity when not renormalised).
    std::vector<std::pair<Symbol, double>> renormalised_expansion(const Symbol& tau) const;

    double dt_between(GridPoint z, GridPoint zbar) const { return time(zbar.r) - time(z.r); }
    double dx_between(GridPoint z, GridPoint zbar) const;
    int wrap_j(int j) const { const int M = grid().M; return ((j % M) + M) % M; }

private:
    friend struct ModelBuilder;
    friend ModelContext build_bphz_model(const ModelContext&, double, double);

    std::shared_ptr<const GridField> xi_, u_, k_, kx_, r_, rx_, ux_;
    int origin_ = 0;
    double eps_ = 0, c1_ = 0, c2_ = 0;
    bool renormalised_ = false;
    Rational kappa_ = default_kappa();
    std::vector<Symbol> basis_;
    std::shared_ptr<const std::map<Symbol, std::vector<std::pair<Symbol, double>>>> m_;
};

struct ModelOptions {
    KappaValue zeta = default_zeta();
    Rational kappa = default_kappa();
    // Keep only rows [keep_first, keep_first + keep_rows) of the physical fields (all by default);
    // the convolutions always run over the full window.
    int keep_first = 0;
    int keep_rows = -1;
};

// Canonical model of the mollified noise xi (rows of a SpectralField); zeta vanishes up to and
// including row `origin` of xi. Throws ResolutionError if eps < 4 dx.
ModelContext build_canonical_model(const SpectralField& xi, double eps, int origin = 0, const ModelOptions& opt = {});
// Same fields, Pi^ = Pi M_eps with the given constants; Gamma unchanged.
ModelContext build_bphz_model(const ModelContext& canonical, double c1, double c2);

} // namespace sheito
