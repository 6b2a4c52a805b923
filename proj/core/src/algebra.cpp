#include "sheito/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sheito {

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal: exact conversion
        bool neg = s[0] == '-';
        std::string body = (neg || s[0] == '+') ? s.substr(1) : s;
        dot = body.find('.');
        std::string digits = body.substr(0, dot) + body.substr(dot + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad rational literal: " + text);
        // strip leading zeros: a leading 0 would be read as an octal literal
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
        Integer num(digits);
        Integer den = 1;
        for (std::size_t i = dot + 1; i < body.size(); ++i) den *= 10;
        Rational q(num, den);
        return neg ? Rational(-q) : q;
    }
    if (s.find_first_not_of("+-0123456789/") != std::string::npos)
        throw std::invalid_argument("bad rational literal: " + text);
    try {
        // same octal hazard for "07/3"
        auto strip = [](std::string part) {
            std::string sign;
            if (!part.empty() && (part[0] == '-' || part[0] == '+')) {
                sign = part.substr(0, 1);
                part = part.substr(1);
            }
            if (part.empty()) throw std::invalid_argument("empty");
            part.erase(0, std::min(part.find_first_not_of('0'), part.size() - 1));
            return sign + part;
        };
        auto slash = s.find('/');
        if (slash != std::string::npos) return Rational(Integer(strip(s.substr(0, slash))), Integer(strip(s.substr(slash + 1))));
        return Rational(Integer(strip(s)));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

std::string to_string(const Rational& q) { return q.str(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Integer factorial(int n)
{
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational pow(const Rational& q, int n)
{
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= q;
    return r;
}

Poly::Poly(const Rational& c)
{
    terms_.add(Monomial{}, c);
}

Poly Poly::var(const std::string& name, int power)
{
    Poly p;
    Monomial m;
    if (power > 0) m[name] = power;
    p.terms_.add(m, Rational(1));
    return p;
}

Poly& Poly::operator+=(const Poly& o)
{
    terms_ += o.terms_;
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    terms_ -= o.terms_;
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    LinComb<Monomial, Rational> r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            r.add(m, ca * cb);
        }
    terms_ = std::move(r);
    return *this;
}

Poly Poly::operator-() const
{
    Poly p;
    p.terms_ = -terms_;
    return p;
}

bool Poly::is_constant() const
{
    for (const auto& [m, c] : terms_)
        if (!m.empty()) return false;
    return true;
}

Rational Poly::constant_term() const { return terms_.coefficient(Monomial{}); }

int Poly::degree_in(const std::string& name) const
{
    int d = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(name);
        if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
}

double Poly::evaluate(const std::map<std::string, double>& values) const
{
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = to_double(c);
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) throw std::invalid_argument("no value for variable " + v);
            term *= std::pow(it->second, e);
        }
        total += term;
    }
    return total;
}

Poly Poly::substitute(const std::map<std::string, Rational>& values) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly term(c);
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            term *= it == values.end() ? Poly::var(v, e) : Poly(pow(it->second, e));
        }
        r += term;
    }
    return r;
}

std::string Poly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        if (a < 0) a = -a;
        bool unit = a == 1 && !m.empty();
        if (!unit) os << a.str();
        bool firstvar = true;
        for (const auto& [v, e] : m) {
            if (!unit || !firstvar) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            firstvar = false;
        }
        first = false;
    }
    return os.str();
}

Poly pow(const Poly& p, int n)
{
    Poly r(1);
    for (int i = 0; i < n; ++i) r *= p;
    return r;
}

} // namespace sheito
