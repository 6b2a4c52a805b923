#pragma once

#include "sheito/structure/tree.hpp"

#include <compare>
#include <string>
#include <vector>

namespace sheito {

// Unordered multiset of trees; the empty forest is the unit of the forest product.
class Forest {
public:
    Forest() { finalize(); }
    explicit Forest(std::vector<DecoratedTree> trees) : trees_(std::move(trees)) { finalize(); }
    explicit Forest(DecoratedTree t) : trees_{std::move(t)} { finalize(); }

    const std::vector<DecoratedTree>& trees() const { return trees_; }
    bool empty() const { return trees_.empty(); }
    std::size_t size() const { return trees_.size(); }
    const std::string& code() const { return code_; }
    KappaValue homogeneity(const ScalingAssignment& s = {}) const;

    Forest operator*(const Forest& o) const;

    friend bool operator==(const Forest& a, const Forest& b) { return a.code_ == b.code_; }
    friend auto operator<=>(const Forest& a, const Forest& b) { return a.code_ <=> b.code_; }

private:
    void finalize();

    std::vector<DecoratedTree> trees_;
    std::string code_;
};

using ForestSum = LinComb<Forest, Rational>;

ForestSum operator*(const ForestSum& a, const ForestSum& b);

struct TensorKey {
    Forest left;
    DecoratedTree right;
    friend bool operator==(const TensorKey&, const TensorKey&) = default;
    friend auto operator<=>(const TensorKey& a, const TensorKey& b)
    {
        if (auto c = a.left <=> b.left; c != 0) return c;
        return a.right <=> b.right;
    }
};

using TensorSum = LinComb<TensorKey, Rational>;

// Readable names for the trees that show up in the worked expansions; falls back to the code.
std::string pretty(const DecoratedTree& t);
std::string pretty(const Forest& f);

} // namespace sheito
