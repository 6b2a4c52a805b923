#pragma once

#include "sheito/structure/symbol.hpp"

#include <optional>
#include <vector>

namespace sheito {

// {tau in T : |tau| < zeta} evaluated exactly at the given kappa, sorted by
// (homogeneity, code). Optionally restricted to one sector.
std::vector<Symbol> enumerate_basis(const KappaValue& zeta, const Rational& kappa,
                                    std::optional<Sector> only = std::nullopt);

inline KappaValue default_zeta() { return {Rational(3, 2), 2}; }
inline Rational default_kappa() { return {1, 100}; }

} // namespace sheito
