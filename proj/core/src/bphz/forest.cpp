#include "sheito/bphz/forest.hpp"

#include <algorithm>
#include <functional>

namespace sheito {

void Forest::finalize()
{
    std::sort(trees_.begin(), trees_.end());
    if (trees_.empty()) {
        code_ = "{}";
        return;
    }
    code_.clear();
    for (std::size_t i = 0; i < trees_.size(); ++i) code_ += (i ? "|" : "") + trees_[i].code();
}

KappaValue Forest::homogeneity(const ScalingAssignment& s) const
{
    KappaValue h;
    for (const auto& t : trees_) h += t.homogeneity(s);
    return h;
}

Forest Forest::operator*(const Forest& o) const
{
    std::vector<DecoratedTree> v = trees_;
    v.insert(v.end(), o.trees_.begin(), o.trees_.end());
    return Forest(std::move(v));
}

ForestSum operator*(const ForestSum& a, const ForestSum& b)
{
    ForestSum r;
    for (const auto& [fa, ca] : a)
        for (const auto& [fb, cb] : b) r.add(fa * fb, ca * cb);
    return r;
}

std::string pretty(const DecoratedTree& t)
{
    std::function<std::string(int)> rec = [&](int v) {
        std::vector<std::string> parts;
        for (int c : t.children(v)) {
            const auto& n = t.nodes()[c];
            std::string e = n.edge.is_zero() ? "" : n.edge.str();
            if (n.label == Label::Xi && t.is_leaf(c) && n.deco.is_zero()) parts.push_back("Xi" + e);
            else parts.push_back(std::string(label_name(n.label)) + e + "(" + rec(c) + ")");
        }
        std::sort(parts.begin(), parts.end());
        const MultiIndex& d = t.nodes()[v].deco;
        if (!d.is_zero()) parts.push_back("X" + d.str());
        if (parts.empty()) return std::string("*");
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
        return s;
    };
    return rec(0);
}

std::string pretty(const Forest& f)
{
    if (f.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < f.trees().size(); ++i) s += (i ? " . " : "") + ("[" + pretty(f.trees()[i]) + "]");
    return s;
}

} // namespace sheito
