#include "sheito/structure/kappa.hpp"

#include <sstream>
#include <stdexcept>

namespace sheito {

std::string KappaValue::str() const
{
    std::ostringstream os;
    if (b_ == 0) return a_.str();
    if (a_ != 0) os << a_.str() << (b_ < 0 ? " - " : " + ");
    else if (b_ < 0) os << "-";
    Rational m = b_ < 0 ? Rational(-b_) : b_;
    if (m != 1) os << m.str() << "*";
    os << "k";
    return os.str();
}

KappaValue parse_kappa_value(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '*') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty homogeneity value");
    KappaValue out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string tok = s.substr(i, j - i);
        if (tok.empty()) throw std::invalid_argument("bad homogeneity value: " + text);
        bool is_k = tok.back() == 'k' || tok.back() == 'K';
        if (is_k) tok.pop_back();
        Rational v = tok.empty() ? Rational(1) : parse_rational(tok);
        if (sign < 0) v = -v;
        out += is_k ? KappaValue(0, v) : KappaValue(v);
        i = j;
    }
    return out;
}

} // namespace sheito
