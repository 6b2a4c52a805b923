#include "sheito/structure/rule.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sheito {

namespace {

std::string edge_str(const EdgeType& e)
{
    std::string s = label_name(e.first);
    if (!e.second.is_zero()) s += e.second.str();
    return s;
}

// Remove `sub` from `whole` (both sorted); false if sub is not contained.
bool remove_submultiset(std::vector<EdgeType>& whole, const std::vector<EdgeType>& sub)
{
    for (const auto& e : sub) {
        auto it = std::find(whole.begin(), whole.end(), e);
        if (it == whole.end()) return false;
        whole.erase(it);
    }
    return true;
}

} // namespace

RulePattern::RulePattern(std::vector<EdgeType> f, std::optional<EdgeType> r) : fixed(std::move(f)), repeat(r)
{
    std::sort(fixed.begin(), fixed.end());
}

bool RulePattern::matches(std::vector<EdgeType> multiset) const
{
    if (!remove_submultiset(multiset, fixed)) return false;
    if (!repeat) return multiset.empty();
    return std::all_of(multiset.begin(), multiset.end(), [&](const EdgeType& e) { return e == *repeat; });
}

std::string RulePattern::str() const
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    if (repeat) {
        os << "[" << edge_str(*repeat) << "]_k";
        first = false;
    }
    for (const auto& e : fixed) {
        os << (first ? "" : ",") << edge_str(e);
        first = false;
    }
    os << ")";
    return os.str();
}

const std::vector<RulePattern>& Rule::at(Label l) const
{
    static const std::vector<RulePattern> empty;
    auto it = map_.find(l);
    return it == map_.end() ? empty : it->second;
}

bool Rule::admits(Label l, const std::vector<EdgeType>& multiset) const
{
    for (const auto& p : at(l))
        if (p.matches(multiset)) return true;
    return false;
}

Rule Rule::standard()
{
    const EdgeType xi{Label::Xi, {0, 0}};
    const EdgeType i0{Label::I, {0, 0}};
    const EdgeType i1{Label::I, {0, 1}};
    Rule r;
    r.set(Label::Xi, {RulePattern{}});
    r.set(Label::I, {RulePattern{}, RulePattern{{xi}}});
    r.set(Label::J, {RulePattern{}, RulePattern{{}, i0}, RulePattern{{i1}, i0}, RulePattern{{i1, i1}, i0},
                     RulePattern{{xi}, i0}});
    return r;
}

bool conforms_strongly(const DecoratedTree& t, const Rule& r)
{
    auto edges_at = [&](int v) {
        std::vector<EdgeType> m;
        for (int c : t.children(v)) m.emplace_back(t.nodes()[c].label, t.nodes()[c].edge);
        std::sort(m.begin(), m.end());
        return m;
    };
    const auto root = edges_at(0);
    bool root_ok = false;
    for (const auto& [l, pats] : r.patterns())
        if (r.admits(l, root)) root_ok = true;
    if (!root_ok) return false;
    for (std::size_t v = 1; v < t.node_count(); ++v)
        if (!r.admits(t.nodes()[v].label, edges_at(static_cast<int>(v)))) return false;
    return true;
}

RuleReport validate_rule(const Rule& r, const ScalingAssignment& s)
{
    RuleReport rep;
    for (const auto& [l, pats] : r.patterns()) {
        if (pats.empty()) {
            rep.normal = false;
            rep.violations.push_back(std::string("R(") + label_name(l) + ") is empty");
            continue;
        }
        // Normality, part 1: negative labels only admit the empty multiset.
        if (s.s(l) < KappaValue(0)) {
            bool only_empty = pats.size() == 1 && pats[0].fixed.empty() && !pats[0].repeat;
            if (!only_empty) {
                rep.normal = false;
                rep.violations.push_back(std::string("label ") + label_name(l) +
                                         " has negative scaling but R(" + label_name(l) + ") != {()}");
            }
        }
        // Normality, part 2: closure under sub-multisets, checked family by family.
        for (const auto& p : pats) {
            const std::size_t n = p.fixed.size();
            std::set<std::vector<EdgeType>> subs;
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                std::vector<EdgeType> sub;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::size_t{1} << i)) sub.push_back(p.fixed[i]);
                subs.insert(sub);
            }
            for (const auto& sub : subs) {
                bool ok = false;
                if (!p.repeat) {
                    ok = r.admits(l, sub);
                } else {
                    for (const auto& q : pats) {
                        if (q.repeat != p.repeat) continue;
                        std::vector<EdgeType> rest = sub;
                        if (!remove_submultiset(rest, q.fixed)) continue;
                        if (std::all_of(rest.begin(), rest.end(), [&](const EdgeType& e) { return e == *p.repeat; }))
                            ok = true;
                    }
                }
                if (!ok) {
                    rep.normal = false;
                    RulePattern shown(sub, p.repeat);
                    rep.violations.push_back(std::string("R(") + label_name(l) + ") contains " + p.str() +
                                             " but not its sub-multiset family " + shown.str());
                }
            }
        }
        // Subcriticality: reg(l) < s(l) + inf_M reg(M).
        bool unbounded = false;
        std::optional<KappaValue> inf;
        for (const auto& p : pats) {
            KappaValue v;
            for (const auto& [lab, k] : p.fixed) v += s.reg(lab) - ScalingAssignment::s(k);
            if (p.repeat) {
                KappaValue rr = s.reg(p.repeat->first) - ScalingAssignment::s(p.repeat->second);
                if (rr < KappaValue(0)) unbounded = true;
            }
            if (!inf || v < *inf) inf = v;
        }
        if (unbounded || !(s.reg(l) < s.s(l) + *inf)) {
            rep.subcritical = false;
            rep.violations.push_back(std::string("subcriticality fails at label ") + label_name(l) + ": reg = " +
                                     s.reg(l).str() + (unbounded ? ", infimum is -infinity"
                                                                 : ", bound = " + (s.s(l) + *inf).str()));
        }
    }
    return rep;
}

} // namespace sheito
