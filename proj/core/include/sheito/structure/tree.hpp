#pragma once

#include "sheito/structure/kappa.hpp"
#include "sheito/structure/symbol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sheito {

enum class Label { Xi, I, J };

const char* label_name(Label l);

// Scaling s on labels and multi-indices, plus the reg function used for subcriticality.
struct ScalingAssignment {
    KappaValue s_xi = noise_homogeneity();
    KappaValue s_i = 2;
    KappaValue s_j = 2;
    KappaValue reg_xi = KappaValue(Rational(-3, 2), -2);
    KappaValue reg_i = KappaValue(Rational(1, 2), -3);
    KappaValue reg_j = KappaValue(Rational(1, 2), -3);

    const KappaValue& s(Label l) const;
    const KappaValue& reg(Label l) const;
    static KappaValue s(const MultiIndex& k) { return k.degree(); }
};

// Rooted tree; node 0 is the root; every other node i carries the edge (parent(i) -> i).
// Immutable once built; the canonical code sorts children recursively (AHU), so two trees
// are equal iff their codes are.
class DecoratedTree {
public:
    struct Node {
        int parent = -1;
        Label label = Label::I; // label of the edge to the parent
        MultiIndex edge;        // e on that edge
        MultiIndex deco;        // n on the node
    };

    DecoratedTree(); // the root tree bullet_0
    explicit DecoratedTree(std::vector<Node> nodes);

    static DecoratedTree bullet(MultiIndex n = {});

    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return nodes_.size() - 1; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    const std::string& code() const { return code_; }
    // Canonical code of the subtree hanging below node v (including v's own decoration).
    std::string subtree_code(int v) const;

    KappaValue homogeneity(const ScalingAssignment& s = {}) const;
    bool is_leaf(int v) const { return children_[v].empty(); }
    int noise_leaf_count() const;

    DecoratedTree graft(Label l, MultiIndex m) const;
    DecoratedTree with_root_decoration(MultiIndex n) const;

    friend bool operator==(const DecoratedTree& a, const DecoratedTree& b) { return a.code_ == b.code_; }
    friend auto operator<=>(const DecoratedTree& a, const DecoratedTree& b) { return a.code_ <=> b.code_; }

private:
    void finalize();
    std::string node_code(int v) const;

    std::vector<Node> nodes_;
    std::vector<std::vector<int>> children_;
    std::string code_;
};

DecoratedTree tree_product(const DecoratedTree& a, const DecoratedTree& b);
DecoratedTree graft(const DecoratedTree& t, Label l, MultiIndex m);

// Inverse of the code: "(label,[e1,e2];{n1,n2})(children...)".
DecoratedTree parse_tree(const std::string& code);

// Symbol -> tree embedding; throws on the zero symbol.
DecoratedTree iota(const Symbol& sigma);
// Tree -> symbol for trees in the image of iota (and Symbol::zero() for I-edges hitting
// polynomial subtrees); nullopt for trees outside (J-edges, non-leaf Xi-edges, decorated Xi-edges).
std::optional<Symbol> tree_to_symbol(const DecoratedTree& t);

} // namespace sheito
