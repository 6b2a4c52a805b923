#include "sheito/bphz/character.hpp"

#include <functional>
#include <stdexcept>

namespace sheito {

Poly pair_moment(LeafKind a, LeafKind b)
{
    if (a > b) std::swap(a, b);
    if (a == LeafKind::Rho && b == LeafKind::Rho) return Poly::var(gen::RR);
    if (a == LeafKind::Rho && b == LeafKind::K) return Poly::var(gen::C1);
    if (a == LeafKind::K && b == LeafKind::K) return Poly::var(gen::KK);
    if (a == LeafKind::DK && b == LeafKind::DK) return Poly::var(gen::C2);
    return {}; // rho-dK and K-dK: odd in x
}

namespace {

// Leaf factors at the root, or nullopt if the value vanishes identically.
std::optional<std::vector<LeafKind>> leaf_factors(const DecoratedTree& t)
{
    const auto& nodes = t.nodes();
    if (!nodes[0].deco.is_zero()) return std::nullopt; // X^n evaluated at the base point
    std::vector<LeafKind> f;
    for (int c : t.children(0)) {
        const auto& n = nodes[c];
        if (n.label == Label::Xi) {
            if (!t.is_leaf(c) || !n.edge.is_zero() || !n.deco.is_zero())
                throw std::domain_error("wick_character: decorated noise edge in " + t.code());
            f.push_back(LeafKind::Rho);
            continue;
        }
        if (n.label == Label::J) throw std::domain_error("wick_character: J-edge in " + t.code());
        if (t.is_leaf(c)) return std::nullopt; // I_k(X^m) = 0
        const auto& kids = t.children(c);
        bool single_noise = kids.size() == 1 && nodes[kids[0]].label == Label::Xi && t.is_leaf(kids[0]) &&
                            nodes[kids[0]].edge.is_zero() && nodes[kids[0]].deco.is_zero() && n.deco.is_zero();
        if (!single_noise) throw std::domain_error("wick_character: unsupported branch in " + t.code());
        if (n.edge == MultiIndex{0, 0}) f.push_back(LeafKind::K);
        else if (n.edge == MultiIndex{0, 1}) f.push_back(LeafKind::DK);
        else throw std::domain_error("wick_character: unsupported kernel derivative in " + t.code());
    }
    return f;
}

Poly wick_sum(std::vector<LeafKind> f)
{
    if (f.empty()) return Poly(1);
    if (f.size() % 2) return {};
    Poly total;
    const LeafKind first = f[0];
    for (std::size_t j = 1; j < f.size(); ++j) {
        Poly pm = pair_moment(first, f[j]);
        if (pm.is_zero()) continue;
        std::vector<LeafKind> rest;
        for (std::size_t k = 1; k < f.size(); ++k)
            if (k != j) rest.push_back(f[k]);
        total += pm * wick_sum(rest);
    }
    return total;
}

} // namespace

Poly wick_character(const DecoratedTree& t)
{
    auto f = leaf_factors(t);
    if (!f) return {};
    return wick_sum(*f);
}

Poly wick_character(const Forest& f)
{
    Poly r(1);
    for (const auto& t : f.trees()) {
        r *= wick_character(t);
        if (r.is_zero()) break;
    }
    return r;
}

double wick_character(const DecoratedTree& t, const PairMomentTable& table)
{
    return wick_character(t).evaluate(table.generator_values());
}

Poly BphzCharacter::operator()(const DecoratedTree& t)
{
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(t.code()); it != cache_.end()) return it->second;
    }
    Poly value;
    for (const auto& [forest, c] : antipode_(t)) value += Poly(c) * wick_character(forest);
    std::lock_guard lock(mu_);
    cache_.emplace(t.code(), value);
    return value;
}

Poly BphzCharacter::operator()(const Forest& f)
{
    Poly r(1);
    for (const auto& t : f.trees()) {
        r *= (*this)(t);
        if (r.is_zero()) break;
    }
    return r;
}

} // namespace sheito
