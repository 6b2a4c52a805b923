#include "sheito/structure/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace sheito {

std::vector<Symbol> enumerate_basis(const KappaValue& zeta, const Rational& kappa, std::optional<Sector> only)
{
    if (kappa <= 0 || kappa >= Rational(1, 2))
        throw std::invalid_argument("enumerate_basis: kappa must lie in (0, 1/2), got " + kappa.str());
    const Rational bound = zeta.at(kappa);
    const Rational i_hom = I_xi().homogeneity().at(kappa); // 1/2 - kappa > 0
    std::vector<Symbol> out;
    for (Sector s : {Sector::Xi, Sector::I1Squared, Sector::I1, Sector::U}) {
        if (only && *only != s) continue;
        const Rational base = sector_root(s).homogeneity().at(kappa);
        for (int m = 0; base + i_hom * m < bound; ++m) {
            const Rational rest = bound - base - i_hom * m;
            for (int l1 = 0; 2 * l1 < rest; ++l1)
                for (int l2 = 0; 2 * l1 + l2 < rest; ++l2) out.push_back(compose({s, m, {l1, l2}}));
        }
    }
    std::sort(out.begin(), out.end(), [](const Symbol& a, const Symbol& b) {
        auto ha = a.homogeneity();
        auto hb = b.homogeneity();
        if (ha != hb) return ha < hb;
        return a.code() < b.code();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace sheito
