#include "sheito/model/modelled.hpp"

#include <cmath>
#include <stdexcept>

namespace sheito {

namespace {

GridField zeros_like(const GridField& f)
{
    GridField z = f;
    std::fill(z.values().begin(), z.values().end(), 0.0);
    return z;
}

Exponent plus(const Exponent& a, const Exponent& b)
{
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

Exponent min_of(const Exponent& a, const Exponent& b)
{
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

bool positive(const Exponent& e, const Rational& kappa) { return !e || e->at(kappa) > 0; }

} // namespace

std::string to_string(const Exponent& e) { return e ? e->str() : "inf"; }

ModelledField::ModelledField(const ModelContext& ctx, Exponent gamma, Exponent eta)
    : ctx_(&ctx), gamma_(std::move(gamma)), eta_(std::move(eta))
{
}

const GridField* ModelledField::component(const Symbol& s) const
{
    auto it = c_.find(s);
    return it == c_.end() ? nullptr : &it->second;
}

bool ModelledField::admits(const Symbol& s) const
{
    return !s.is_zero() && (!gamma_ || s.homogeneity().at(ctx_->kappa()) < gamma_->at(ctx_->kappa()));
}

void ModelledField::add(const Symbol& s, const GridField& f, double scale)
{
    if (!admits(s) || scale == 0) return;
    auto it = c_.find(s);
    if (it == c_.end()) {
        it = c_.emplace(s, f).first;
        if (scale != 1.0)
            for (double& v : it->second.values()) v *= scale;
        return;
    }
    auto& dst = it->second.values();
    const auto& src = f.values();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += scale * src[i];
}

void ModelledField::prune()
{
    std::erase_if(c_, [](const auto& kv) {
        for (double v : kv.second.values())
            if (v != 0) return false;
        return true;
    });
}

std::optional<KappaValue> ModelledField::regularity() const
{
    std::optional<KappaValue> a;
    for (const auto& [s, f] : c_) {
        const KappaValue h = s.homogeneity();
        if (!a || h < *a) a = h;
    }
    return a;
}

bool ModelledField::in_U_span() const
{
    for (const auto& [s, f] : c_)
        if (!in_U(s)) return false;
    return true;
}

LinComb<Symbol, double> ModelledField::at(GridPoint z) const
{
    LinComb<Symbol, double> v;
    const int j = ctx_->wrap_j(z.j);
    for (const auto& [s, f] : c_) v.add(s, f(z.r, j));
    return v;
}

ModelledField lift_xi(const ModelContext& ctx)
{
    ModelledField V(ctx, std::nullopt, std::nullopt);
    GridField one = zeros_like(ctx.xi());
    for (int r = 0; r < one.rows(); ++r) std::fill(one.row(r), one.row(r) + one.grid().M, ctx.indicator(r));
    V.add(Symbol::xi(), one);
    return V;
}

ModelledField modelled_U_eps(const ModelContext& ctx, const KappaValue& gamma, const KappaValue& eta)
{
    ModelledField U(ctx, gamma, eta);
    U.add(Symbol::one(), ctx.u());
    GridField ind = zeros_like(ctx.u());
    for (int r = 0; r < ind.rows(); ++r) std::fill(ind.row(r), ind.row(r) + ind.grid().M, ctx.indicator(r));
    U.add(I_xi(), ind);
    U.add(Symbol::x({0, 1}), ctx.R_xi_x());
    if (U.admits(Symbol::x({0, 2}))) U.add(Symbol::x({0, 2}), dx(ctx.R_xi(), 2), 0.5);
    if (U.admits(Symbol::x({1, 0}))) {
        const GridField& R = ctx.R_xi();
        GridField d = zeros_like(R);
        const int M = R.grid().M, n = R.rows();
        if (n < 2) throw std::invalid_argument("modelled_U_eps: time derivative needs two rows");
        const double h = R.grid().dt;
        for (int r = 0; r < n; ++r) {
            const int a = std::max(r - 1, 0), b = std::min(r + 1, n - 1);
            for (int j = 0; j < M; ++j) d(r, j) = (R(b, j) - R(a, j)) / ((b - a) * h);
        }
        U.add(Symbol::x({1, 0}), d);
    }
    if (U.admits(Symbol::x({1, 1})) || U.admits(Symbol::x({0, 3})))
        throw std::invalid_argument("modelled_U_eps: polynomial part beyond degree 2 is not supported");
    return U;
}

namespace {

// Q_{<gamma}(A B) into out, pointwise over the grid.
void multiply_into(ModelledField& out, const ModelledField& A, const ModelledField& B, bool require_T)
{
    for (const auto& [sa, fa] : A.components())
        for (const auto& [sb, fb] : B.components()) {
            const Symbol s = sa * sb;
            if (!out.admits(s)) continue;
            if (require_T && !in_T(s))
                throw std::invalid_argument("product_md: product " + sa.str() + " * " + sb.str() + " leaves T");
            GridField f = fa;
            const auto& vb = fb.values();
            auto& vf = f.values();
            for (std::size_t i = 0; i < vf.size(); ++i) vf[i] *= vb[i];
            out.add(s, f);
        }
}

} // namespace

ModelledField lift_composition(const Nonlinearity& h, const ModelledField& V)
{
    if (!V.in_U_span()) throw std::invalid_argument("lift_composition: V has coefficients outside U");
    const ModelContext& ctx = V.context();
    const GridField* v = V.component(Symbol::one());
    GridField base = v ? *v : zeros_like(ctx.u());

    ModelledField tilde(ctx, V.gamma(), V.eta());
    for (const auto& [s, f] : V.components())
        if (!s.is_one()) tilde.add(s, f);

    ModelledField H(ctx, V.gamma(), V.eta());
    GridField c = base;
    for (double& x : c.values()) x = h(x);
    H.add(Symbol::one(), c);

    constexpr int max_order = 5;
    ModelledField power = tilde;
    double factorial = 1;
    for (int k = 1; k <= max_order && !power.components().empty(); ++k) {
        factorial *= k;
        GridField w = base;
        for (double& x : w.values()) x = h.derivative(k, x) / factorial;
        for (const auto& [s, f] : power.components()) {
            GridField term = f;
            for (std::size_t i = 0; i < term.values().size(); ++i) term.values()[i] *= w.values()[i];
            H.add(s, term);
        }
        if (k < max_order) {
            ModelledField next(ctx, V.gamma(), V.eta());
            multiply_into(next, power, tilde, false);
            power = std::move(next);
        }
    }
    H.prune();
    return H;
}

ModelledField abstract_Dx(const ModelledField& V)
{
    if (!V.in_U_span()) throw std::invalid_argument("abstract_Dx: V has coefficients outside U");
    const Rational& kappa = V.context().kappa();
    if (V.gamma() && V.gamma()->at(kappa) <= 1)
        throw std::invalid_argument("abstract_Dx: gamma = " + to_string(V.gamma()) + " must exceed 1");
    ModelledField D(V.context(), plus(V.gamma(), KappaValue(-1)), plus(V.eta(), KappaValue(-1)));
    for (const auto& [s, f] : V.components()) {
        const auto d = decompose(s);
        if (d->m > 0) D.add(compose({Sector::I1, d->m - 1, d->l}), f, d->m);
        if (d->l.k2 > 0) D.add(compose({Sector::U, d->m, {d->l.k1, d->l.k2 - 1}}), f, d->l.k2);
    }
    return D;
}

ModelledField product_md(const ModelledField& V1, const ModelledField& V2)
{
    if (&V1.context() != &V2.context()) throw std::invalid_argument("product_md: fields over different models");
    const Rational& kappa = V1.context().kappa();
    const auto a1 = V1.regularity(), a2 = V2.regularity();
    const Exponent gamma = min_of(plus(V1.gamma(), a2), plus(V2.gamma(), a1));
    const Exponent eta = min_of(min_of(plus(V1.eta(), a2), plus(V2.eta(), a1)), plus(V1.eta(), V2.eta()));
    if (!positive(gamma, kappa))
        throw std::invalid_argument("product_md: gamma = " + to_string(gamma) + " (eta = " + to_string(eta) +
                                    ") is not positive");
    ModelledField P(V1.context(), gamma, eta);
    multiply_into(P, V1, V2, true);
    P.prune();
    return P;
}

GridField reconstruct(const ModelledField& V)
{
    const ModelContext& ctx = V.context();
    GridField out = zeros_like(ctx.xi());
    std::map<Sector, GridField> roots;
    for (const auto& [s, f] : V.components()) {
        for (const auto& [tau, c] : ctx.renormalised_expansion(s)) {
            if (c == 0 || tau.is_zero()) continue;
            const auto d = decompose(tau);
            if (!d) throw std::invalid_argument("reconstruct: symbol not in T: " + tau.str());
            if (d->m != 0 || !d->l.is_zero()) continue; // centred at z, vanishes there
            auto it = roots.find(d->sector);
            if (it == roots.end()) it = roots.emplace(d->sector, ctx.root_field(d->sector)).first;
            const auto& rv = it->second.values();
            const auto& fv = f.values();
            auto& ov = out.values();
            for (std::size_t i = 0; i < ov.size(); ++i) ov[i] += c * fv[i] * rv[i];
        }
    }
    return out;
}

} // namespace sheito
