#pragma once

#include "sheito/structure/symbol.hpp"

#include <array>
#include <stdexcept>

namespace sheito {

// Gamma_h(sigma I(Xi)^m X^l) = sigma (X1 + h1)^l1 (X2 + h2)^l2 (I(Xi) + h3)^m, extended linearly.
// C is any commutative coefficient ring with construction from int (Rational, Poly, double).
template <class C>
LinComb<Symbol, C> gamma_action(const std::array<C, 3>& h, const Symbol& tau)
{
    auto f = decompose(tau);
    if (!f) throw std::invalid_argument("gamma_action: symbol not in T: " + tau.str());
    auto power = [](const C& x, int n) {
        C r(1);
        for (int i = 0; i < n; ++i) r = r * x;
        return r;
    };
    LinComb<Symbol, C> out;
    for (int a = 0; a <= f->l.k1; ++a)
        for (int b = 0; b <= f->l.k2; ++b)
            for (int c = 0; c <= f->m; ++c) {
                C coeff = C(static_cast<int>(binomial(f->l.k1, a) * binomial(f->l.k2, b) * binomial(f->m, c)));
                coeff = coeff * power(h[0], f->l.k1 - a) * power(h[1], f->l.k2 - b) * power(h[2], f->m - c);
                out.add(compose({f->sector, c, {a, b}}), coeff);
            }
    return out;
}

template <class C>
LinComb<Symbol, C> gamma_action(const std::array<C, 3>& h, const LinComb<Symbol, C>& v)
{
    LinComb<Symbol, C> out;
    for (const auto& [tau, c] : v) out.add(gamma_action(h, tau), c);
    return out;
}

} // namespace sheito
