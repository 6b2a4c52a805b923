#pragma once

#include "sheito/bphz/character.hpp"
#include "sheito/structure/symbol.hpp"

#include <map>
#include <string>
#include <vector>

namespace sheito {

// M tau = (h (x) id) Delta^- tau, with h = g o A evaluated symbolically. Coefficients are
// polynomials in the generators C1, C2 (and KK, RR, which cancel on the basis).
class RenormalisationMap {
public:
    explicit RenormalisationMap(ScalingAssignment s = {}) : s_(s), h_(s) {}

    SymbolSum operator()(const Symbol& tau);
    SymbolSum operator()(const DecoratedTree& t);
    SymbolSum operator()(const SymbolSum& v);
    std::size_t coproduct_terms(const Symbol& tau);
    BphzCharacter& character() { return h_; }

private:
    ScalingAssignment s_;
    BphzCharacter h_;
    std::map<std::string, SymbolSum> cache_;
};

// M(Xi I^m X^k) = Xi I^m X^k - m c1 I^{m-1} X^k, M(I1^2 I^m X^k) = I1^2 I^m X^k - c2 I^m X^k,
// identity on the other sectors.
SymbolSum closed_form_M(const Symbol& tau, const Poly& c1 = Poly::var(gen::C1), const Poly& c2 = Poly::var(gen::C2));
SymbolSum closed_form_M(const SymbolSum& v, const Poly& c1 = Poly::var(gen::C1), const Poly& c2 = Poly::var(gen::C2));

// Numeric substitution of generator values in a symbolic expansion.
std::map<Symbol, double> evaluate(const SymbolSum& v, const std::map<std::string, double>& generators);

struct ConvergenceWitness {
    std::string tree;      // code of the ambient basis tree
    std::string subtree;   // code of sigma^0
    std::string condition; // "1'" or "2'"
    KappaValue homogeneity;
    int subset_size = 0; // |A| for condition 1'
};

struct ConvergenceReport {
    bool condition1 = true;
    bool condition2 = true;
    KappaValue min_homogeneity;
    std::vector<std::string> minimal_subtrees; // distinct sigma^0 codes attaining the minimum
    std::vector<ConvergenceWitness> failures;
    std::size_t subtrees_checked = 0;
};

// For every connected subtree sigma (>= 2 nodes that are not noise leaves) of every basis
// tree: 1') |sigma^0| + (3/2 - kappa)|A| > 0 for every nonempty set A of noise edges of tau
// outside sigma with |A| + #noise(sigma) even; 2') |sigma^0| > -3/2. Evaluated at kappa.
ConvergenceReport convergence_criterion_check(const std::vector<Symbol>& basis, const Rational& kappa);

} // namespace sheito
