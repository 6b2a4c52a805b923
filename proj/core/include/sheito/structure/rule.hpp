#pragma once

#include "sheito/structure/tree.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sheito {

using EdgeType = std::pair<Label, MultiIndex>;

// A family of edge multisets: `fixed` plus any number (>= 0) of copies of `repeat`.
// Without `repeat` the family is the single multiset `fixed`.
struct RulePattern {
    std::vector<EdgeType> fixed; // kept sorted
    std::optional<EdgeType> repeat;

    RulePattern() = default;
    RulePattern(std::vector<EdgeType> f, std::optional<EdgeType> r = std::nullopt);
    bool matches(std::vector<EdgeType> multiset) const;
    std::string str() const;
};

class Rule {
public:
    void set(Label l, std::vector<RulePattern> patterns) { map_[l] = std::move(patterns); }
    const std::vector<RulePattern>& at(Label l) const;
    bool admits(Label l, const std::vector<EdgeType>& multiset) const;
    const std::map<Label, std::vector<RulePattern>>& patterns() const { return map_; }

    // R(Xi) = {()}, R(I) = {(), Xi}, R(J) = {(), [I]_k, ([I]_k,I1), ([I]_k,I1,I1), ([I]_k,Xi)}.
    static Rule standard();

private:
    std::map<Label, std::vector<RulePattern>> map_;
};

bool conforms_strongly(const DecoratedTree& t, const Rule& r);

struct RuleReport {
    bool normal = true;
    bool subcritical = true;
    std::vector<std::string> violations;
};

RuleReport validate_rule(const Rule& r, const ScalingAssignment& s);

} // namespace sheito
