#include "sheito/structure/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sheito {

const char* label_name(Label l)
{
    switch (l) {
    case Label::Xi: return "Xi";
    case Label::I: return "I";
    case Label::J: return "J";
    }
    return "?";
}

const KappaValue& ScalingAssignment::s(Label l) const
{
    switch (l) {
    case Label::Xi: return s_xi;
    case Label::I: return s_i;
    case Label::J: return s_j;
    }
    return s_i;
}

const KappaValue& ScalingAssignment::reg(Label l) const
{
    switch (l) {
    case Label::Xi: return reg_xi;
    case Label::I: return reg_i;
    case Label::J: return reg_j;
    }
    return reg_i;
}

DecoratedTree::DecoratedTree() : nodes_(1) { finalize(); }

DecoratedTree::DecoratedTree(std::vector<Node> nodes) : nodes_(std::move(nodes))
{
    if (nodes_.empty() || nodes_[0].parent != -1) throw std::invalid_argument("tree needs a root at index 0");
    for (std::size_t i = 1; i < nodes_.size(); ++i)
        if (nodes_[i].parent < 0 || nodes_[i].parent >= static_cast<int>(i))
            throw std::invalid_argument("tree nodes must list parents before children");
    finalize();
}

DecoratedTree DecoratedTree::bullet(MultiIndex n)
{
    std::vector<Node> v(1);
    v[0].deco = n;
    return DecoratedTree(std::move(v));
}

void DecoratedTree::finalize()
{
    children_.assign(nodes_.size(), {});
    for (std::size_t i = 1; i < nodes_.size(); ++i) children_[nodes_[i].parent].push_back(static_cast<int>(i));
    code_ = node_code(0);
}

std::string DecoratedTree::node_code(int v) const
{
    const Node& n = nodes_[v];
    std::string head = "(";
    head += v == 0 ? "R" : label_name(n.label);
    head += ",[" + std::to_string(n.edge.k1) + "," + std::to_string(n.edge.k2) + "];{" + std::to_string(n.deco.k1) +
            "," + std::to_string(n.deco.k2) + "})";
    std::vector<std::string> kids;
    kids.reserve(children_[v].size());
    for (int c : children_[v]) kids.push_back(node_code(c));
    std::sort(kids.begin(), kids.end());
    head += "(";
    for (const auto& k : kids) head += k;
    head += ")";
    return head;
}

std::string DecoratedTree::subtree_code(int v) const { return node_code(v); }

KappaValue DecoratedTree::homogeneity(const ScalingAssignment& s) const
{
    KappaValue h;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        h += KappaValue(nodes_[i].deco.degree());
        if (i > 0) h += s.s(nodes_[i].label) - KappaValue(nodes_[i].edge.degree());
    }
    return h;
}

int DecoratedTree::noise_leaf_count() const
{
    int n = 0;
    for (std::size_t i = 1; i < nodes_.size(); ++i)
        if (nodes_[i].label == Label::Xi) ++n;
    return n;
}

DecoratedTree DecoratedTree::graft(Label l, MultiIndex m) const
{
    std::vector<Node> v;
    v.reserve(nodes_.size() + 1);
    v.push_back(Node{});
    for (const auto& n : nodes_) {
        Node c = n;
        c.parent = n.parent + 1;
        v.push_back(c);
    }
    v[1].parent = 0;
    v[1].label = l;
    v[1].edge = m;
    return DecoratedTree(std::move(v));
}

DecoratedTree DecoratedTree::with_root_decoration(MultiIndex n) const
{
    std::vector<Node> v = nodes_;
    v[0].deco = n;
    return DecoratedTree(std::move(v));
}

DecoratedTree tree_product(const DecoratedTree& a, const DecoratedTree& b)
{
    std::vector<DecoratedTree::Node> v = a.nodes();
    v[0].deco = v[0].deco + b.nodes()[0].deco;
    const int offset = static_cast<int>(v.size()) - 1;
    for (std::size_t i = 1; i < b.nodes().size(); ++i) {
        DecoratedTree::Node n = b.nodes()[i];
        n.parent = n.parent == 0 ? 0 : n.parent + offset;
        v.push_back(n);
    }
    return DecoratedTree(std::move(v));
}

DecoratedTree graft(const DecoratedTree& t, Label l, MultiIndex m) { return t.graft(l, m); }

namespace {

class TreeParser {
public:
    explicit TreeParser(const std::string& s) : s_(s) {}

    DecoratedTree parse()
    {
        std::vector<DecoratedTree::Node> nodes;
        node(nodes, -1);
        if (i_ != s_.size()) fail();
        return DecoratedTree(std::move(nodes));
    }

private:
    [[noreturn]] void fail() const
    {
        throw std::invalid_argument("tree parse error at position " + std::to_string(i_) + ": " + s_);
    }
    void expect(char c)
    {
        if (i_ >= s_.size() || s_[i_] != c) fail();
        ++i_;
    }
    int integer()
    {
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) fail();
        int v = std::stoi(s_.substr(i_, j - i_));
        i_ = j;
        return v;
    }
    MultiIndex pair(char open, char close)
    {
        expect(open);
        int a = integer();
        expect(',');
        int b = integer();
        expect(close);
        return {a, b};
    }

    void node(std::vector<DecoratedTree::Node>& nodes, int parent)
    {
        expect('(');
        std::size_t j = s_.find(',', i_);
        if (j == std::string::npos) fail();
        std::string lab = s_.substr(i_, j - i_);
        i_ = j + 1;
        DecoratedTree::Node n;
        n.parent = parent;
        if (lab == "Xi") n.label = Label::Xi;
        else if (lab == "I") n.label = Label::I;
        else if (lab == "J") n.label = Label::J;
        else if (lab == "R" && parent == -1) n.label = Label::I;
        else fail();
        n.edge = pair('[', ']');
        expect(';');
        n.deco = pair('{', '}');
        expect(')');
        const int self = static_cast<int>(nodes.size());
        nodes.push_back(n);
        expect('(');
        while (i_ < s_.size() && s_[i_] == '(') node(nodes, self);
        expect(')');
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

} // namespace

DecoratedTree parse_tree(const std::string& code) { return TreeParser(code).parse(); }

DecoratedTree iota(const Symbol& sigma)
{
    if (sigma.is_zero()) throw std::invalid_argument("iota is undefined on the zero symbol");
    DecoratedTree t = DecoratedTree::bullet(sigma.poly());
    const DecoratedTree noise = DecoratedTree().graft(Label::Xi, {});
    for (int i = 0; i < sigma.noise_power(); ++i) t = tree_product(t, noise);
    for (const auto& p : sigma.planted()) t = tree_product(t, iota(*p.arg).graft(Label::I, p.k));
    return t;
}

std::optional<Symbol> tree_to_symbol(const DecoratedTree& t)
{
    const auto& nodes = t.nodes();
    std::function<std::optional<Symbol>(int)> rec = [&](int v) -> std::optional<Symbol> {
        Symbol s = Symbol::x(nodes[v].deco);
        for (int c : t.children(v)) {
            const auto& n = nodes[c];
            if (n.label == Label::J) return std::nullopt;
            if (n.label == Label::Xi) {
                if (!t.is_leaf(c) || !n.edge.is_zero() || !n.deco.is_zero()) return std::nullopt;
                s = s * Symbol::xi();
                continue;
            }
            auto sub = rec(c);
            if (!sub) return std::nullopt;
            s = s * Symbol::integrate(n.edge, *sub);
        }
        return s;
    };
    return rec(0);
}

} // namespace sheito
