#pragma once

#include "sheito/algebra.hpp"

#include <compare>
#include <string>

namespace sheito {

// a + b*kappa with exact rationals. The default order is lexicographic in (a, b):
// it decides every comparison "for kappa small enough" at once.
class KappaValue {
public:
    KappaValue() = default;
    KappaValue(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {} // NOLINT
    KappaValue(int a) : a_(a) {} // NOLINT(google-explicit-constructor)

    static KappaValue kappa(const Rational& coeff = 1) { return {0, coeff}; }

    const Rational& const_part() const { return a_; }
    const Rational& kappa_coeff() const { return b_; }

    KappaValue operator+(const KappaValue& o) const { return {a_ + o.a_, b_ + o.b_}; }
    KappaValue operator-(const KappaValue& o) const { return {a_ - o.a_, b_ - o.b_}; }
    KappaValue operator-() const { return {-a_, -b_}; }
    KappaValue operator*(const Rational& s) const { return {a_ * s, b_ * s}; }
    KappaValue& operator+=(const KappaValue& o) { return *this = *this + o; }
    KappaValue& operator-=(const KappaValue& o) { return *this = *this - o; }

    friend bool operator==(const KappaValue& x, const KappaValue& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend std::strong_ordering operator<=>(const KappaValue& x, const KappaValue& y)
    {
        if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (x.b_ != y.b_) return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Exact value at a concrete kappa.
    Rational at(const Rational& kappa) const { return a_ + b_ * kappa; }
    double at(double kappa) const { return to_double(a_) + to_double(b_) * kappa; }

    std::string str() const;

private:
    Rational a_ = 0;
    Rational b_ = 0;
};

// Accepts forms like "3/2+2k", "-1-2*k", "k", "0.5", "1/4 - k".
KappaValue parse_kappa_value(const std::string& text);

} // namespace sheito
