#include "sheito/bphz/coproduct.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace sheito {

namespace {

using Node = DecoratedTree::Node;

// Component id per node (-1 if the node is not touched by gamma), plus node lists.
struct Components {
    std::vector<int> id;
    std::vector<std::vector<int>> nodes;
};

Components find_components(const DecoratedTree& t, const std::vector<bool>& gamma)
{
    const int n = static_cast<int>(t.node_count());
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    std::vector<bool> touched(n, false);
    for (int i = 1; i < n; ++i)
        if (gamma[i]) {
            const int p = t.nodes()[i].parent;
            touched[i] = touched[p] = true;
            uf[find(i)] = find(p);
        }
    Components c;
    c.id.assign(n, -1);
    std::vector<int> rep_to_id(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!touched[v]) continue;
        int r = find(v);
        if (rep_to_id[r] < 0) {
            rep_to_id[r] = static_cast<int>(c.nodes.size());
            c.nodes.emplace_back();
        }
        c.id[v] = rep_to_id[r];
        c.nodes[rep_to_id[r]].push_back(v); // ascending, so the top node comes first
    }
    return c;
}

DecoratedTree extract(const DecoratedTree& t, const std::vector<int>& comp, const std::vector<MultiIndex>& deco)
{
    std::vector<int> local(t.node_count(), -1);
    std::vector<Node> nodes;
    nodes.reserve(comp.size());
    for (int v : comp) {
        Node n = t.nodes()[v];
        n.deco = deco[v];
        if (nodes.empty()) {
            n = Node{};
            n.deco = deco[v];
        } else {
            n.parent = local[t.nodes()[v].parent];
        }
        local[v] = static_cast<int>(nodes.size());
        nodes.push_back(n);
    }
    return DecoratedTree(std::move(nodes));
}

DecoratedTree contract_with(const DecoratedTree& t, const std::vector<bool>& gamma, const std::vector<MultiIndex>& deco,
                            const std::vector<MultiIndex>& extra_edge)
{
    const int n = static_cast<int>(t.node_count());
    std::vector<int> rep(n, -1);
    std::vector<Node> nodes;
    for (int v = 0; v < n; ++v) {
        if (v > 0 && gamma[v]) {
            rep[v] = rep[t.nodes()[v].parent];
            nodes[rep[v]].deco = nodes[rep[v]].deco + deco[v];
            continue;
        }
        Node nd = t.nodes()[v];
        nd.deco = deco[v];
        if (v > 0) {
            nd.parent = rep[nd.parent];
            nd.edge = nd.edge + extra_edge[v];
        }
        rep[v] = static_cast<int>(nodes.size());
        nodes.push_back(nd);
    }
    return DecoratedTree(std::move(nodes));
}

} // namespace

std::vector<Subforest> subforests(const DecoratedTree& t)
{
    const int n = static_cast<int>(t.node_count());
    const int e = n - 1;
    if (e > 24) throw std::invalid_argument("subforests: tree too large for exhaustive enumeration");
    std::vector<MultiIndex> deco(n);
    for (int v = 0; v < n; ++v) deco[v] = t.nodes()[v].deco;
    std::vector<Subforest> out;
    out.reserve(std::size_t{1} << e);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e); ++mask) {
        Subforest s;
        s.edges.assign(n, false);
        for (int i = 1; i < n; ++i) s.edges[i] = (mask >> (i - 1)) & 1U;
        Components c = find_components(t, s.edges);
        s.components = c.nodes;
        std::vector<DecoratedTree> trees;
        for (const auto& comp : c.nodes) trees.push_back(extract(t, comp, deco));
        s.forest = Forest(std::move(trees));
        out.push_back(std::move(s));
    }
    return out;
}

DecoratedTree contract(const DecoratedTree& t, const std::vector<bool>& gamma)
{
    if (gamma.size() != t.node_count() || (!gamma.empty() && gamma[0]))
        throw std::invalid_argument("contract: edge mask does not describe a subforest of the tree");
    std::vector<MultiIndex> deco(t.node_count());
    for (std::size_t v = 0; v < t.node_count(); ++v) deco[v] = t.nodes()[v].deco;
    return contract_with(t, gamma, deco, std::vector<MultiIndex>(t.node_count()));
}

TensorSum coproduct_minus(const DecoratedTree& t, const ScalingAssignment& s)
{
    const int n = static_cast<int>(t.node_count());
    const int e = n - 1;
    if (e > 24) throw std::invalid_argument("coproduct_minus: tree too large");
    const KappaValue zero;
    TensorSum out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e); ++mask) {
        std::vector<bool> gamma(n, false);
        for (int i = 1; i < n; ++i) gamma[i] = (mask >> (i - 1)) & 1U;
        if (mask == 0) {
            out.add({Forest{}, t}, 1);
            continue;
        }
        Components comps = find_components(t, gamma);
        const int nc = static_cast<int>(comps.nodes.size());
        std::vector<KappaValue> h(nc);
        bool positive = false;
        for (int c = 0; c < nc; ++c) {
            for (int v : comps.nodes[c])
                if (v != comps.nodes[c][0]) h[c] += s.s(t.nodes()[v].label) - KappaValue(t.nodes()[v].edge.degree());
            if (h[c] > zero) positive = true;
        }
        if (positive) continue;

        std::vector<int> decorated; // nodes of gamma with n != 0
        for (int v = 0; v < n; ++v)
            if (comps.id[v] >= 0 && !t.nodes()[v].deco.is_zero()) decorated.push_back(v);
        std::vector<int> boundary; // edges outside gamma adjacent to N_gamma
        for (int i = 1; i < n; ++i)
            if (!gamma[i] && (comps.id[i] >= 0 || comps.id[t.nodes()[i].parent] >= 0)) boundary.push_back(i);

        std::vector<MultiIndex> n_gamma(n), e_gamma(n);
        std::function<void(std::size_t, Rational)> over_edges;
        std::function<void(std::size_t, Rational)> over_nodes;

        over_edges = [&](std::size_t bi, Rational coeff) {
            if (bi == boundary.size()) {
                std::vector<MultiIndex> left(n), right(n);
                for (int v = 0; v < n; ++v) {
                    left[v] = n_gamma[v];
                    right[v] = comps.id[v] >= 0 ? t.nodes()[v].deco - n_gamma[v] : t.nodes()[v].deco;
                }
                for (int i : boundary) {
                    if (comps.id[i] >= 0) left[i] = left[i] + e_gamma[i];
                    const int p = t.nodes()[i].parent;
                    if (comps.id[p] >= 0) left[p] = left[p] + e_gamma[i];
                }
                std::vector<DecoratedTree> trees;
                trees.reserve(nc);
                for (const auto& comp : comps.nodes) trees.push_back(extract(t, comp, left));
                out.add({Forest(std::move(trees)), contract_with(t, gamma, right, e_gamma)}, coeff);
                return;
            }
            const int i = boundary[bi];
            const int p = t.nodes()[i].parent;
            std::vector<int> touched;
            if (comps.id[i] >= 0) touched.push_back(comps.id[i]);
            if (comps.id[p] >= 0) touched.push_back(comps.id[p]);
            for (int deg = 0;; ++deg) {
                bool fits = true;
                for (int c : touched)
                    if (h[c] + KappaValue(deg) > zero) fits = false;
                if (!fits) break;
                for (int a = 0; 2 * a <= deg; ++a) {
                    MultiIndex d{a, deg - 2 * a};
                    e_gamma[i] = d;
                    for (int c : touched) h[c] += KappaValue(deg);
                    over_edges(bi + 1, coeff / Rational(factorial(d)));
                    for (int c : touched) h[c] -= KappaValue(deg);
                }
            }
            e_gamma[i] = {};
        };

        over_nodes = [&](std::size_t ni, Rational coeff) {
            if (ni == decorated.size()) {
                over_edges(0, coeff);
                return;
            }
            const int v = decorated[ni];
            const MultiIndex& full = t.nodes()[v].deco;
            const int c = comps.id[v];
            for (int a = 0; a <= full.k1; ++a)
                for (int b = 0; b <= full.k2; ++b) {
                    MultiIndex k{a, b};
                    if (h[c] + KappaValue(k.degree()) > zero) continue;
                    n_gamma[v] = k;
                    h[c] += KappaValue(k.degree());
                    over_nodes(ni + 1, coeff * Rational(binomial(full, k)));
                    h[c] -= KappaValue(k.degree());
                }
            n_gamma[v] = {};
        };

        over_nodes(0, Rational(1));
    }
    return out;
}

} // namespace sheito
