#pragma once

#include "sheito/model/context.hpp"
#include "sheito/spde/nonlinearity.hpp"

#include <map>
#include <optional>
#include <string>

namespace sheito {

// Exponent of a modelled field; nullopt stands for +infinity.
using Exponent = std::optional<KappaValue>;
std::string to_string(const Exponent& e);

// Grid map z -> V(z) = sum_sigma V_sigma(z) sigma with one GridField per symbol over the rows of
// the model window, and the exponent pair (gamma, eta) of D^{gamma,eta}. Symbols with homogeneity
// >= gamma never carry coefficients. The context must outlive the field.
class ModelledField {
public:
    ModelledField(const ModelContext& ctx, Exponent gamma, Exponent eta);

    const ModelContext& context() const { return *ctx_; }
    const Exponent& gamma() const { return gamma_; }
    const Exponent& eta() const { return eta_; }
    const std::map<Symbol, GridField>& components() const { return c_; }
    const GridField* component(const Symbol& s) const;
    // Adds f to the coefficient of s (dropped when |s| >= gamma).
    void add(const Symbol& s, const GridField& f, double scale = 1.0);
    bool admits(const Symbol& s) const; // |s| < gamma at the context's kappa
    void prune();                        // drops identically vanishing coefficients
    // Lowest homogeneity carried (the alpha of the product rule); nullopt when empty.
    std::optional<KappaValue> regularity() const;
    bool in_U_span() const;
    LinComb<Symbol, double> at(GridPoint z) const;

private:
    const ModelContext* ctx_;
    Exponent gamma_, eta_;
    std::map<Symbol, GridField> c_;
};

// 1_+ Xi: coefficient 1_+(t) on Xi, exponents (inf, inf).
ModelledField lift_xi(const ModelContext& ctx);
// U_eps = u 1 + 1_+ I(Xi) + sum_{0 < |k| < gamma} (d^k Rbar * zeta / k!) X^k. Only |k| <= 2 is
// supported; d_t uses central differences in time.
ModelledField modelled_U_eps(const ModelContext& ctx, const KappaValue& gamma = default_zeta(),
                             const KappaValue& eta = KappaValue(Rational(1, 2), -1));
// H(V) = sum_{k <= 5} h^(k)(v) / k! (V - v 1)^k truncated below gamma, with v the coefficient of 1.
// Rejects V with coefficients outside U.
ModelledField lift_composition(const Nonlinearity& h, const ModelledField& V);
// D_x(I(Xi)^m X^l) = m I_1(Xi) I(Xi)^{m-1} X^l + l_2 I(Xi)^m X^{l - (0,1)}; exponents (gamma-1, eta-1).
// Requires V in U and gamma > 1.
ModelledField abstract_Dx(const ModelledField& V);
// Q_{<gamma}(V1 V2) with gamma = (g1 + a2) ^ (g2 + a1), eta = (e1 + a2) ^ (e2 + a1) ^ (e1 + e2).
// Throws if gamma <= 0 or a retained product leaves T.
ModelledField product_md(const ModelledField& V1, const ModelledField& V2);
// (R V)(z) = (Pi^_z V(z))(z) under the context's (canonical or renormalised) model.
GridField reconstruct(const ModelledField& V);

} // namespace sheito
