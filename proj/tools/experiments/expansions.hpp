#pragma once

// Reference expansions of Delta^- and the twisted antipode for the small trees worked out
// by hand, and the comparison used by the unit tests and the renorm experiment.

#include "sheito/bphz/antipode.hpp"
#include "sheito/bphz/character.hpp"
#include "sheito/bphz/coproduct.hpp"

#include <string>
#include <vector>

namespace sheito::worked {

inline DecoratedTree T(const std::string& s) { return iota(parse_symbol(s)); }
inline DecoratedTree unit() { return DecoratedTree::bullet(); }
inline DecoratedTree bullet01() { return DecoratedTree::bullet({0, 1}); }
// I_k applied to a bare node: an edge that the canonical model sends to zero.
inline DecoratedTree I_bare(MultiIndex k = {}) { return graft(DecoratedTree::bullet(), Label::I, k); }

inline Forest F(std::vector<DecoratedTree> ts) { return Forest(std::move(ts)); }
inline ForestSum FS(const Forest& f, const Rational& c = 1) { return ForestSum(f, c); }

inline TensorSum tensor(const ForestSum& left, const DecoratedTree& right, const Rational& c = 1)
{
    TensorSum out;
    for (const auto& [f, a] : left) out.add(TensorKey{f, right}, a * c);
    return out;
}

struct Expected {
    std::string name;
    DecoratedTree tree;
    TensorSum coproduct;
    ForestSum antipode;
    bool complete = true; // false: the listed terms are exact, the rest must be annihilated
};

inline std::vector<Expected> displayed_expansions()
{
    const DecoratedTree xi = T("Xi"), xi01 = T("Xi X[0,1]");
    const DecoratedTree I = T("I(Xi)"), I1 = T("I1(Xi)");
    const ForestSum A_xi = FS(F({xi}), -1);
    const ForestSum A_xi01 = FS(F({xi01}), -1) + FS(F({xi, bullet01()}));
    std::vector<Expected> out;

    {
        Expected e{"Xi", xi, {}, {}};
        e.coproduct = tensor(FS(F({})), xi) + tensor(FS(F({xi})), unit());
        e.antipode = A_xi;
        out.push_back(e);
    }
    {
        Expected e{"Xi X[0,1]", xi01, {}, {}};
        e.coproduct = tensor(FS(F({})), xi01) + tensor(FS(F({xi})), bullet01()) + tensor(FS(F({xi01})), unit());
        e.antipode = A_xi01;
        out.push_back(e);
    }
    {
        const DecoratedTree tau = T("Xi I(Xi)");
        const DecoratedTree xiIb = tree_product(xi, I_bare()), xiI1b = tree_product(xi, I_bare({0, 1}));
        Expected e{"Xi I(Xi)", tau, {}, {}};
        e.coproduct = tensor(FS(F({})), tau) + tensor(FS(F({xi})), I) + tensor(FS(F({xi01})), I1) +
                      tensor(FS(F({xi})), xiIb) + tensor(FS(F({xi01})), xiI1b) + tensor(FS(F({xi, xi})), I_bare()) +
                      tensor(FS(F({xi01, xi01})), I_bare({0, 1})) + tensor(FS(F({tau})), unit());
        e.antipode = FS(F({tau}), -1) + FS(F({xi, I})) - A_xi01 * FS(F({I1})) + FS(F({xi, xiIb})) -
                     A_xi01 * FS(F({xiI1b})) - FS(F({xi, xi, I_bare()})) - A_xi01 * A_xi01 * FS(F({I_bare({0, 1})}));
        out.push_back(e);
    }
    {
        const DecoratedTree tau = T("I1(Xi)^2");
        Expected e{"I1(Xi)^2", tau, {}, {}, false};
        e.coproduct = tensor(FS(F({})), tau) + tensor(FS(F({I1})), I1, 2) + tensor(FS(F({tau})), unit());
        e.antipode = FS(F({tau}), -1) + FS(F({I1, I1}), 2);
        out.push_back(e);
    }
    return out;
}

struct Comparison {
    bool ok = true;
    std::size_t computed_terms = 0;
    std::size_t displayed_terms = 0;
    std::size_t annihilated_terms = 0; // terms beyond the display, all killed by the character
    std::vector<std::string> problems;
};

// Every displayed term must appear with its exact coefficient. For a complete display nothing
// else may appear; otherwise every extra term must vanish under h (coproduct, left factor) or
// under g (antipode).
inline Comparison compare_coproduct(const TensorSum& computed, const Expected& e, BphzCharacter& h)
{
    Comparison c;
    c.computed_terms = computed.size();
    c.displayed_terms = e.coproduct.size();
    TensorSum rest = computed - e.coproduct;
    for (const auto& [k, a] : rest) {
        if (e.coproduct.coefficient(k) != 0 || computed.coefficient(k) == 0 || e.complete || !h(k.left).is_zero()) {
            c.ok = false;
            c.problems.push_back(pretty(k.left) + " (x) " + pretty(k.right) + " coefficient off by " + to_string(a));
        } else {
            ++c.annihilated_terms;
        }
    }
    return c;
}

inline Comparison compare_antipode(const ForestSum& computed, const Expected& e)
{
    Comparison c;
    c.computed_terms = computed.size();
    c.displayed_terms = e.antipode.size();
    ForestSum rest = computed - e.antipode;
    for (const auto& [f, a] : rest) {
        if (e.antipode.coefficient(f) != 0 || computed.coefficient(f) == 0 || e.complete ||
            !wick_character(f).is_zero()) {
            c.ok = false;
            c.problems.push_back(pretty(f) + " coefficient off by " + to_string(a));
        } else {
            ++c.annihilated_terms;
        }
    }
    return c;
}

} // namespace sheito::worked
