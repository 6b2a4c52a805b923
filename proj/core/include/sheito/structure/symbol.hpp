#pragma once

#include "sheito/algebra.hpp"
#include "sheito/structure/kappa.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sheito {

// k = (k1, k2): k1 counts time, k2 counts space.
struct MultiIndex {
    int k1 = 0;
    int k2 = 0;

    int degree() const { return 2 * k1 + k2; }
    bool is_zero() const { return k1 == 0 && k2 == 0; }
    bool leq(const MultiIndex& o) const { return k1 <= o.k1 && k2 <= o.k2; }
    MultiIndex operator+(const MultiIndex& o) const { return {k1 + o.k1, k2 + o.k2}; }
    MultiIndex operator-(const MultiIndex& o) const { return {k1 - o.k1, k2 - o.k2}; }
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    std::string str() const { return "[" + std::to_string(k1) + "," + std::to_string(k2) + "]"; }
};

inline Integer binomial(const MultiIndex& n, const MultiIndex& k) { return binomial(n.k1, k.k1) * binomial(n.k2, k.k2); }
inline Integer factorial(const MultiIndex& k) { return factorial(k.k1) * factorial(k.k2); }

inline const KappaValue& noise_homogeneity()
{
    static const KappaValue v(Rational(-3, 2), Rational(-1));
    return v;
}

// Commutative monomial Xi^a * X^l * prod I_k(sigma), kept in normal form.
// The identified-zero symbols I_k(X^m) collapse to the distinguished zero.
class Symbol {
public:
    struct Planted {
        MultiIndex k;
        std::shared_ptr<const Symbol> arg;
    };

    Symbol(); // the unit 1
    static Symbol one() { return {}; }
    static Symbol zero();
    static Symbol xi();
    static Symbol x(MultiIndex l);
    static Symbol integrate(MultiIndex k, const Symbol& s);
    static Symbol integrate(const Symbol& s) { return integrate({0, 0}, s); }

    Symbol operator*(const Symbol& o) const;
    Symbol pow(int n) const;

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && noise_ == 0 && poly_.is_zero() && planted_.empty(); }
    bool is_polynomial() const { return !zero_ && noise_ == 0 && planted_.empty(); }
    int noise_power() const { return noise_; }
    const MultiIndex& poly() const { return poly_; }
    const std::vector<Planted>& planted() const { return planted_; }
    // Symbol with X^l removed.
    Symbol without_poly() const;

    KappaValue homogeneity() const;
    int noise_count() const; // total number of Xi occurrences
    const std::string& code() const { return code_; }
    const std::string& str() const { return code_; }

    friend bool operator==(const Symbol& a, const Symbol& b) { return a.code_ == b.code_; }
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) { return a.code_ <=> b.code_; }

private:
    void normalize();

    bool zero_ = false;
    int noise_ = 0;
    MultiIndex poly_;
    std::vector<Planted> planted_; // sorted by (arg code, k)
    std::string code_;
};

// Canonical shorthands.
Symbol I_xi();  // I(Xi)
Symbol I1_xi(); // I_{(0,1)}(Xi)

// Grammar: factors Xi | 1 | X | X[k1,k2] | I(...) | I[k1,k2](...) | I1(...) | (...),
// each optionally raised by ^n, joined by juxtaposition, whitespace or '*'.
Symbol parse_symbol(const std::string& text);

// The four sectors of T: sigma * I(Xi)^m * X^l with sigma in {Xi, I1(Xi)^2, I1(Xi), 1}.
enum class Sector { Xi, I1Squared, I1, U };

struct SectorForm {
    Sector sector;
    int m = 0;
    MultiIndex l;
};

const char* sector_name(Sector s);
Symbol sector_root(Sector s);

// Decomposition tau = sigma I(Xi)^m X^l, or nullopt if tau is not in T.
std::optional<SectorForm> decompose(const Symbol& tau);
Symbol compose(const SectorForm& f);

bool in_T(const Symbol& tau);
bool in_U(const Symbol& tau);
bool in_U_prime(const Symbol& tau);

using SymbolSum = LinComb<Symbol, Poly>;
using RationalSymbolSum = LinComb<Symbol, Rational>;

std::string to_string(const SymbolSum& v);

} // namespace sheito
