#include "sheito/structure/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sheito {

namespace {

std::string planted_code(const Symbol::Planted& p)
{
    std::string head = p.k.is_zero() ? "I" : "I" + p.k.str();
    return head + "(" + p.arg->code() + ")";
}

} // namespace

Symbol::Symbol() { normalize(); }

Symbol Symbol::zero()
{
    Symbol s;
    s.zero_ = true;
    s.normalize();
    return s;
}

Symbol Symbol::xi()
{
    Symbol s;
    s.noise_ = 1;
    s.normalize();
    return s;
}

Symbol Symbol::x(MultiIndex l)
{
    Symbol s;
    s.poly_ = l;
    s.normalize();
    return s;
}

Symbol Symbol::integrate(MultiIndex k, const Symbol& arg)
{
    if (arg.is_zero() || arg.is_polynomial()) return zero();
    Symbol s;
    s.planted_.push_back({k, std::make_shared<const Symbol>(arg)});
    s.normalize();
    return s;
}

Symbol Symbol::operator*(const Symbol& o) const
{
    if (zero_ || o.zero_) return zero();
    Symbol s = *this;
    s.noise_ += o.noise_;
    s.poly_ = s.poly_ + o.poly_;
    s.planted_.insert(s.planted_.end(), o.planted_.begin(), o.planted_.end());
    s.normalize();
    return s;
}

Symbol Symbol::pow(int n) const
{
    Symbol r;
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

Symbol Symbol::without_poly() const
{
    if (zero_) return *this;
    Symbol s = *this;
    s.poly_ = {};
    s.normalize();
    return s;
}

KappaValue Symbol::homogeneity() const
{
    KappaValue h = noise_homogeneity() * Rational(noise_) + KappaValue(poly_.degree());
    for (const auto& p : planted_) h += p.arg->homogeneity() + KappaValue(2 - p.k.degree());
    return h;
}

int Symbol::noise_count() const
{
    int n = noise_;
    for (const auto& p : planted_) n += p.arg->noise_count();
    return n;
}

void Symbol::normalize()
{
    if (zero_) {
        noise_ = 0;
        poly_ = {};
        planted_.clear();
        code_ = "0";
        return;
    }
    std::vector<std::pair<std::string, Planted>> keyed;
    keyed.reserve(planted_.size());
    for (auto& p : planted_) keyed.emplace_back(planted_code(p), p);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    planted_.clear();
    std::vector<std::string> parts;
    if (noise_ > 0) parts.push_back(noise_ == 1 ? "Xi" : "Xi^" + std::to_string(noise_));
    for (std::size_t i = 0; i < keyed.size();) {
        std::size_t j = i;
        while (j < keyed.size() && keyed[j].first == keyed[i].first) {
            planted_.push_back(keyed[j].second);
            ++j;
        }
        std::size_t mult = j - i;
        parts.push_back(mult == 1 ? keyed[i].first : keyed[i].first + "^" + std::to_string(mult));
        i = j;
    }
    if (!poly_.is_zero()) parts.push_back("X" + poly_.str());
    if (parts.empty()) {
        code_ = "1";
        return;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
    code_ = os.str();
}

Symbol I_xi() { return Symbol::integrate(Symbol::xi()); }
Symbol I1_xi() { return Symbol::integrate({0, 1}, Symbol::xi()); }

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Symbol parse()
    {
        Symbol r = product();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("symbol parse error at position " + std::to_string(i_) + " (" + what + "): " + s_);
    }

    void skip()
    {
        while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == '*')) ++i_;
    }

    bool at_factor_start()
    {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return c == 'X' || c == 'I' || c == '1' || c == '(';
    }

    int integer()
    {
        skip();
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) fail("expected integer");
        int v = std::stoi(s_.substr(i_, j - i_));
        i_ = j;
        return v;
    }

    void expect(char c)
    {
        skip();
        if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    MultiIndex index()
    {
        expect('[');
        int a = integer();
        expect(',');
        int b = integer();
        expect(']');
        return {a, b};
    }

    Symbol product()
    {
        if (!at_factor_start()) fail("expected factor");
        Symbol r;
        while (at_factor_start()) r = r * factor();
        return r;
    }

    Symbol factor()
    {
        Symbol a = atom();
        skip();
        if (i_ < s_.size() && s_[i_] == '^') {
            ++i_;
            a = a.pow(integer());
        }
        return a;
    }

    Symbol atom()
    {
        skip();
        char c = s_[i_];
        if (c == '1') {
            ++i_;
            return Symbol::one();
        }
        if (c == '(') {
            ++i_;
            Symbol r = product();
            expect(')');
            return r;
        }
        if (s_.compare(i_, 2, "Xi") == 0) {
            i_ += 2;
            return Symbol::xi();
        }
        if (c == 'X') {
            ++i_;
            skip();
            if (i_ < s_.size() && s_[i_] == '[') return Symbol::x(index());
            return Symbol::x({0, 1});
        }
        if (c == 'I') {
            ++i_;
            MultiIndex k{0, 0};
            if (i_ < s_.size() && s_[i_] == '1') {
                ++i_;
                k = {0, 1};
            } else {
                skip();
                if (i_ < s_.size() && s_[i_] == '[') k = index();
            }
            expect('(');
            Symbol arg = product();
            expect(')');
            return Symbol::integrate(k, arg);
        }
        fail("unknown factor");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

} // namespace

Symbol parse_symbol(const std::string& text)
{
    std::string t = text;
    if (t == "0") return Symbol::zero();
    return Parser(t).parse();
}

const char* sector_name(Sector s)
{
    switch (s) {
    case Sector::Xi: return "V_Xi";
    case Sector::I1Squared: return "V_I1(Xi)^2";
    case Sector::I1: return "V_I1(Xi)";
    case Sector::U: return "V";
    }
    return "?";
}

Symbol sector_root(Sector s)
{
    switch (s) {
    case Sector::Xi: return Symbol::xi();
    case Sector::I1Squared: return I1_xi().pow(2);
    case Sector::I1: return I1_xi();
    case Sector::U: return Symbol::one();
    }
    return Symbol::one();
}

std::optional<SectorForm> decompose(const Symbol& tau)
{
    if (tau.is_zero() || tau.noise_power() > 1) return std::nullopt;
    int m = 0;
    int n1 = 0;
    const Symbol xi = Symbol::xi();
    for (const auto& p : tau.planted()) {
        if (p.arg->code() != xi.code()) return std::nullopt;
        if (p.k == MultiIndex{0, 0}) ++m;
        else if (p.k == MultiIndex{0, 1}) ++n1;
        else return std::nullopt;
    }
    if (n1 > 2 || (n1 > 0 && tau.noise_power() > 0)) return std::nullopt;
    Sector s = tau.noise_power() == 1 ? Sector::Xi : n1 == 2 ? Sector::I1Squared : n1 == 1 ? Sector::I1 : Sector::U;
    return SectorForm{s, m, tau.poly()};
}

Symbol compose(const SectorForm& f)
{
    return sector_root(f.sector) * I_xi().pow(f.m) * Symbol::x(f.l);
}

bool in_T(const Symbol& tau) { return decompose(tau).has_value(); }

bool in_U(const Symbol& tau)
{
    auto d = decompose(tau);
    return d && d->sector == Sector::U;
}

bool in_U_prime(const Symbol& tau) { return tau.is_polynomial() || tau == I1_xi(); }

std::string to_string(const SymbolSum& v)
{
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : v) {
        std::string cs = c.str();
        bool simple = c.terms().size() == 1;
        if (!first) os << " + ";
        if (cs == "1") os << s.str();
        else if (cs == "-1") os << "-" << s.str();
        else if (s.is_one()) os << (simple ? cs : "(" + cs + ")");
        else os << (simple ? cs : "(" + cs + ")") << "*" << s.str();
        first = false;
    }
    return os.str();
}

} // namespace sheito
