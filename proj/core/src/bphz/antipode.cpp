#include "sheito/bphz/antipode.hpp"

#include <stdexcept>

namespace sheito {

const ForestSum& TwistedAntipode::operator()(const DecoratedTree& t)
{
    std::lock_guard lock(mu_);
    return compute(t, 0);
}

ForestSum TwistedAntipode::operator()(const Forest& f)
{
    std::lock_guard lock(mu_);
    ForestSum r(Forest{}, 1);
    for (const auto& t : f.trees()) r = r * compute(t, 0);
    return r;
}

const ForestSum& TwistedAntipode::compute(const DecoratedTree& t, int depth)
{
    if (auto it = cache_.find(t.code()); it != cache_.end()) return it->second;
    if (t.edge_count() == 0) throw std::invalid_argument("twisted antipode: tree without edges");
    if (t.homogeneity(s_) > KappaValue(0))
        throw std::invalid_argument("twisted antipode: tree of positive homogeneity: " + t.code());
    max_depth_ = std::max(max_depth_, depth);

    const Forest self(t);
    const DecoratedTree unit;
    ForestSum acc;
    for (const auto& [key, c] : coproduct_minus(t, s_)) {
        if (key.left == self && key.right == unit) continue;
        ForestSum left(Forest{}, 1);
        for (const auto& comp : key.left.trees()) {
            // Every left component is strictly smaller than t except in the
            // identity-on-the-left term, which cannot occur here.
            if (comp == t) throw std::logic_error("twisted antipode: recursion does not decrease");
            left = left * compute(comp, depth + 1);
        }
        acc.add(left * ForestSum(Forest(key.right), 1), c);
    }
    auto [it, inserted] = cache_.emplace(t.code(), -acc);
    return it->second;
}

ForestSum twisted_antipode(const DecoratedTree& t)
{
    TwistedAntipode a;
    return a(t);
}

} // namespace sheito
