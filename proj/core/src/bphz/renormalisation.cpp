#include "sheito/bphz/renormalisation.hpp"

#include "sheito/bphz/coproduct.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sheito {

SymbolSum RenormalisationMap::operator()(const DecoratedTree& t)
{
    SymbolSum out;
    for (const auto& [key, c] : coproduct_minus(t, s_)) {
        Poly hv = h_(key.left);
        if (hv.is_zero()) continue;
        auto sym = tree_to_symbol(key.right);
        if (!sym) throw std::domain_error("renormalisation: right factor outside the symbol set: " + key.right.code());
        if (sym->is_zero()) continue;
        out.add(*sym, hv * Poly(c));
    }
    return out;
}

SymbolSum RenormalisationMap::operator()(const Symbol& tau)
{
    if (auto it = cache_.find(tau.code()); it != cache_.end()) return it->second;
    SymbolSum r = (*this)(iota(tau));
    cache_.emplace(tau.code(), r);
    return r;
}

SymbolSum RenormalisationMap::operator()(const SymbolSum& v)
{
    SymbolSum out;
    for (const auto& [tau, c] : v) out.add((*this)(tau), c);
    return out;
}

std::size_t RenormalisationMap::coproduct_terms(const Symbol& tau) { return coproduct_minus(iota(tau), s_).size(); }

SymbolSum closed_form_M(const Symbol& tau, const Poly& c1, const Poly& c2)
{
    auto f = decompose(tau);
    if (!f) throw std::invalid_argument("closed_form_M: symbol not in T: " + tau.str());
    SymbolSum out(tau, Poly(1));
    if (f->sector == Sector::Xi && f->m >= 1) out.add(compose({Sector::U, f->m - 1, f->l}), -Poly(f->m) * c1);
    if (f->sector == Sector::I1Squared) out.add(compose({Sector::U, f->m, f->l}), -c2);
    return out;
}

SymbolSum closed_form_M(const SymbolSum& v, const Poly& c1, const Poly& c2)
{
    SymbolSum out;
    for (const auto& [tau, c] : v) out.add(closed_form_M(tau, c1, c2), c);
    return out;
}

std::map<Symbol, double> evaluate(const SymbolSum& v, const std::map<std::string, double>& generators)
{
    std::map<Symbol, double> out;
    for (const auto& [tau, c] : v) out[tau] = c.evaluate(generators);
    return out;
}

ConvergenceReport convergence_criterion_check(const std::vector<Symbol>& basis, const Rational& kappa)
{
    ConvergenceReport rep;
    bool have_min = false;
    std::set<std::string> minimal;
    const Rational three_halves(3, 2);
    for (const auto& tau : basis) {
        const DecoratedTree t = iota(tau);
        const int n = static_cast<int>(t.node_count());
        const int e = n - 1;
        std::vector<int> noise_edges;
        for (int i = 1; i < n; ++i)
            if (t.nodes()[i].label == Label::Xi) noise_edges.push_back(i);
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << e); ++mask) {
            std::vector<bool> in(n, false);
            for (int i = 1; i < n; ++i) in[i] = (mask >> (i - 1)) & 1U;
            // connectivity: exactly one edge of the set has its parent outside the node set
            std::vector<bool> node(n, false);
            for (int i = 1; i < n; ++i)
                if (in[i]) node[i] = node[t.nodes()[i].parent] = true;
            int tops = 0;
            for (int v = 0; v < n; ++v)
                if (node[v] && (v == 0 || !in[v])) ++tops;
            if (tops != 1) continue;
            int inner = 0, noises = 0;
            for (int v = 0; v < n; ++v) {
                if (!node[v]) continue;
                if (v > 0 && in[v] && t.nodes()[v].label == Label::Xi) ++noises;
                else ++inner;
            }
            if (inner < 2) continue;
            ++rep.subtrees_checked;
            // sigma^0: the subtree with node decorations set to zero
            std::vector<DecoratedTree::Node> nodes;
            std::vector<int> local(n, -1);
            for (int v = 0; v < n; ++v) {
                if (!node[v]) continue;
                DecoratedTree::Node nd;
                if (!nodes.empty()) {
                    nd = t.nodes()[v];
                    nd.parent = local[nd.parent];
                    nd.deco = {};
                }
                local[v] = static_cast<int>(nodes.size());
                nodes.push_back(nd);
            }
            const DecoratedTree sigma0(std::move(nodes));
            const KappaValue h = sigma0.homogeneity();
            if (!have_min || h < rep.min_homogeneity) {
                rep.min_homogeneity = h;
                minimal.clear();
                have_min = true;
            }
            if (h == rep.min_homogeneity) minimal.insert(sigma0.code());

            const Rational hv = h.at(kappa);
            if (!(hv > -three_halves)) {
                rep.condition2 = false;
                rep.failures.push_back({t.code(), sigma0.code(), "2'", h, 0});
            }
            int outside = 0;
            for (int i : noise_edges)
                if (!in[i]) ++outside;
            for (int a = 1; a <= outside; ++a) {
                if ((a + noises) % 2) continue;
                if (!(hv + (three_halves - kappa) * a > 0)) {
                    rep.condition1 = false;
                    rep.failures.push_back({t.code(), sigma0.code(), "1'", h, a});
                }
            }
        }
    }
    rep.minimal_subtrees.assign(minimal.begin(), minimal.end());
    return rep;
}

} // namespace sheito
