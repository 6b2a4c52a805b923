#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace sheito {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

Integer binomial(int n, int k);
Integer factorial(int n);

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(double x) { return x == 0.0; }

// Finite linear combination sum_k c_k * key_k with zero coefficients pruned.
template <class Key, class Coeff>
class LinComb {
public:
    using Map = std::map<Key, Coeff>;

    LinComb() = default;
    LinComb(const Key& k, const Coeff& c) { add(k, c); }

    void add(const Key& k, const Coeff& c)
    {
        if (is_zero(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }

    void add(const LinComb& other, const Coeff& scale)
    {
        for (const auto& [k, c] : other.terms_) add(k, c * scale);
    }

    LinComb& operator+=(const LinComb& o)
    {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o)
    {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    LinComb operator-() const
    {
        LinComb r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    LinComb scaled(const Coeff& s) const
    {
        LinComb r;
        for (const auto& [k, c] : terms_) r.add(k, c * s);
        return r;
    }

    // Apply a linear map defined on keys.
    template <class Key2, class F>
    LinComb<Key2, Coeff> map_linear(F&& f) const
    {
        LinComb<Key2, Coeff> r;
        for (const auto& [k, c] : terms_) r.add(f(k), c);
        return r;
    }

    Coeff coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

template <class Key, class Coeff>
bool is_zero(const LinComb<Key, Coeff>& v) { return v.empty(); }

// Monomial in named commuting variables: name -> exponent (> 0).
using Monomial = std::map<std::string, int>;

// Polynomial with exact rational coefficients in named variables.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);          // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rational(c)) {} // NOLINT(google-explicit-constructor)
    static Poly var(const std::string& name, int power = 1);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    // Degree in a single variable (0 if absent).
    int degree_in(const std::string& name) const;
    const LinComb<Monomial, Rational>& terms() const { return terms_; }

    double evaluate(const std::map<std::string, double>& values) const;
    // Substitute a rational value for each named variable; unnamed stay symbolic.
    Poly substitute(const std::map<std::string, Rational>& values) const;
    std::string str() const;

private:
    LinComb<Monomial, Rational> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

Rational pow(const Rational& q, int n);
Poly pow(const Poly& p, int n);

} // namespace sheito
