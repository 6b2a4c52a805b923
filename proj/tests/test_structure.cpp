#include "doctest.h"

#include "sheito/structure/basis.hpp"
#include "sheito/structure/rule.hpp"
#include "sheito/structure/structure_group.hpp"
#include "sheito/structure/tree.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace sheito;

namespace {

const KappaValue kXi(Rational(-3, 2), -1);

Rational rnd_rational(std::mt19937& g)
{
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    return Rational(num(g), den(g));
}

} // namespace

TEST_SUITE("kappa")
{
    TEST_CASE("arithmetic and lexicographic order")
    {
        KappaValue a(Rational(1, 2), -1);
        KappaValue b(Rational(1, 2), 3);
        CHECK(a + b == KappaValue(1, 2));
        CHECK(-a == KappaValue(Rational(-1, 2), 1));
        CHECK(a < b);
        CHECK(KappaValue(0, 100) < KappaValue(Rational(1, 1000)));
        CHECK(a.at(Rational(1, 4)) == Rational(1, 4));
    }

    TEST_CASE("parsing")
    {
        CHECK(parse_kappa_value("3/2+2k") == KappaValue(Rational(3, 2), 2));
        CHECK(parse_kappa_value("-1 - 2*k") == KappaValue(-1, -2));
        CHECK(parse_kappa_value("k") == KappaValue(0, 1));
        CHECK(parse_kappa_value("0.25") == KappaValue(Rational(1, 4)));
        CHECK(parse_kappa_value("0.05") == KappaValue(Rational(1, 20)));
        CHECK(parse_kappa_value("07/3") == KappaValue(Rational(7, 3)));
        CHECK_THROWS(parse_kappa_value(""));
        CHECK_THROWS(parse_rational("1/0"));
        CHECK_THROWS(parse_rational("0x10"));
    }
}

TEST_SUITE("symbol")
{
    TEST_CASE("homogeneities")
    {
        CHECK(Symbol::xi().homogeneity() == kXi);
        CHECK(Symbol::one().homogeneity() == KappaValue(0));
        CHECK(parse_symbol("I1(Xi)^2").homogeneity() == KappaValue(-1, -2));
        CHECK(parse_symbol("Xi I(Xi)").homogeneity() == KappaValue(-1, -2));
        CHECK(Symbol::x({1, 1}).homogeneity() == KappaValue(3));
        CHECK(parse_symbol("I[1,0](Xi)").homogeneity() == kXi);
    }

    TEST_CASE("normal form")
    {
        CHECK(Symbol::x({0, 1}) * Symbol::x({1, 0}) == Symbol::x({1, 1}));
        CHECK(Symbol::xi() * Symbol::one() == Symbol::xi());
        CHECK(Symbol::integrate({0, 1}, Symbol::x({2, 0})).is_zero());
        CHECK(Symbol::integrate(Symbol::one()).is_zero());
        CHECK((Symbol::xi() * Symbol::integrate(Symbol::x({})) ).is_zero());
        CHECK(parse_symbol("I(Xi) Xi") == parse_symbol("Xi*I(Xi)"));
        CHECK(parse_symbol("Xi I(Xi) I(Xi)") == parse_symbol("Xi I(Xi)^2"));
        CHECK(parse_symbol("I1(Xi)") == parse_symbol("I[0,1](Xi)"));
        CHECK(parse_symbol("Xi I(Xi)^2 X[0,1]").str() == "Xi I(Xi)^2 X[0,1]");
        CHECK(parse_symbol("I[0,1](Xi)^2 I(Xi)").str() == "I(Xi) I[0,1](Xi)^2");
        CHECK(parse_symbol("1").is_one());
        CHECK_THROWS(parse_symbol("Xi I("));
        CHECK_THROWS(parse_symbol("Y"));
    }

    TEST_CASE("round trip through the canonical string")
    {
        for (const auto& s : enumerate_basis(default_zeta(), default_kappa())) CHECK(parse_symbol(s.str()) == s);
    }

    TEST_CASE("sector membership")
    {
        CHECK(in_T(parse_symbol("Xi I(Xi)^3")));
        CHECK(in_T(parse_symbol("I1(Xi)^2 X[0,1]")));
        CHECK(in_U(parse_symbol("I(Xi)^2 X[1,0]")));
        CHECK_FALSE(in_U(parse_symbol("I1(Xi)")));
        CHECK(in_U_prime(parse_symbol("I1(Xi)")));
        CHECK(in_U_prime(parse_symbol("X[3,1]")));
        CHECK_FALSE(in_T(parse_symbol("Xi^2")));
        CHECK_FALSE(in_T(parse_symbol("Xi I1(Xi)")));
        CHECK_FALSE(in_T(parse_symbol("I1(Xi)^3")));
        CHECK_FALSE(in_T(parse_symbol("I(Xi I(Xi))")));
        auto d = decompose(parse_symbol("I1(Xi)^2 I(Xi)^4 X[1,1]"));
        REQUIRE(d);
        CHECK(d->sector == Sector::I1Squared);
        CHECK(d->m == 4);
        CHECK(d->l == MultiIndex{1, 1});
    }
}

TEST_SUITE("tree")
{
    TEST_CASE("iota and homogeneity")
    {
        DecoratedTree xi = iota(Symbol::xi());
        CHECK(xi.edge_count() == 1);
        CHECK(xi.nodes()[1].label == Label::Xi);
        CHECK(xi.homogeneity() == kXi);
        CHECK(iota(Symbol::x({1, 0})) == DecoratedTree::bullet({1, 0}));
        CHECK(DecoratedTree::bullet({1, 0}).homogeneity() == KappaValue(2));
        CHECK(iota(parse_symbol("Xi I(Xi)")).homogeneity() == KappaValue(-1, -2));
        // Xi^2 I(Xi): two noise edges at the root and one I-edge carrying a noise edge
        DecoratedTree t = iota(parse_symbol("Xi^2 I(Xi)"));
        CHECK(t.edge_count() == 4);
        CHECK(t.children(0).size() == 3);
        CHECK_THROWS(iota(Symbol::zero()));
    }

    TEST_CASE("iota preserves homogeneity on the basis and inverts")
    {
        for (const auto& s : enumerate_basis(default_zeta(), default_kappa())) {
            DecoratedTree t = iota(s);
            CHECK(t.homogeneity() == s.homogeneity());
            auto back = tree_to_symbol(t);
            REQUIRE(back);
            CHECK(*back == s);
            CHECK(parse_tree(t.code()) == t);
        }
    }

    TEST_CASE("product and grafting")
    {
        CHECK(tree_product(DecoratedTree::bullet({0, 1}), DecoratedTree::bullet({1, 0})) == DecoratedTree::bullet({1, 1}));
        CHECK(graft(iota(Symbol::xi()), Label::I, {}) == iota(I_xi()));
        DecoratedTree t = iota(parse_symbol("Xi I(Xi)^2"));
        CHECK(graft(t, Label::I, {0, 1}).homogeneity() == t.homogeneity() + KappaValue(1));
        DecoratedTree a = iota(parse_symbol("Xi X[0,1]"));
        DecoratedTree b = iota(parse_symbol("I(Xi) X[1,0]"));
        CHECK(tree_product(a, b).homogeneity() == a.homogeneity() + b.homogeneity());
        CHECK(tree_product(a, b) == iota(parse_symbol("Xi I(Xi) X[1,1]")));
    }

    TEST_CASE("canonical code ignores construction order")
    {
        std::mt19937 gen(7);
        const std::vector<Symbol> factors = {Symbol::xi(), I_xi(), I_xi(), I1_xi(), Symbol::x({0, 1}),
                                             Symbol::integrate({1, 0}, Symbol::xi() * Symbol::x({0, 2}))};
        std::set<std::string> codes;
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<Symbol> f = factors;
            std::shuffle(f.begin(), f.end(), gen);
            DecoratedTree t = DecoratedTree::bullet();
            for (const auto& s : f) t = tree_product(t, iota(s));
            codes.insert(t.code());
        }
        CHECK(codes.size() == 1);
        // distinct decorations give distinct codes
        CHECK(iota(parse_symbol("I[0,1](Xi) I(Xi X[0,1])")) != iota(parse_symbol("I(Xi) I[0,1](Xi X[0,1])")));
    }

    TEST_CASE("tree code parser")
    {
        DecoratedTree t = parse_tree("(R,[0,0];{0,1})((Xi,[0,0];{0,0})()(I,[0,1];{0,0})((Xi,[0,0];{0,0})()))");
        CHECK(t == iota(parse_symbol("Xi I1(Xi) X[0,1]")));
        CHECK_THROWS(parse_tree("(R,[0,0];{0,0})("));
        CHECK_THROWS(parse_tree("(Q,[0,0];{0,0})()"));
    }
}

TEST_SUITE("rule")
{
    TEST_CASE("strong conformity")
    {
        const Rule r = Rule::standard();
        for (const auto& s : enumerate_basis(default_zeta(), default_kappa())) CHECK(conforms_strongly(iota(s), r));
        // noise branch and an integration branch carrying a noise edge: conforms
        CHECK(conforms_strongly(parse_tree("(R,[0,0];{0,0})((I,[0,0];{0,0})((Xi,[0,0];{0,0})())(Xi,[0,0];{0,0})())"), r));
        // a J-edge next to a noise edge at the root: no R(l) contains {J, Xi}
        CHECK_FALSE(conforms_strongly(parse_tree("(R,[0,0];{0,0})((J,[0,0];{0,0})((I,[0,0];{0,0})())(Xi,[0,0];{0,0})())"), r));
        // a noise edge cannot carry children
        CHECK_FALSE(conforms_strongly(parse_tree("(R,[0,0];{0,0})((Xi,[0,0];{0,0})((Xi,[0,0];{0,0})()))"), r));
        CHECK_FALSE(conforms_strongly(iota(parse_symbol("I1(Xi)^3")), r));
    }

    TEST_CASE("normal and subcritical for the standard rule")
    {
        auto rep = validate_rule(Rule::standard(), ScalingAssignment{});
        CHECK(rep.normal);
        CHECK(rep.subcritical);
        CHECK(rep.violations.empty());
    }

    TEST_CASE("violations are reported")
    {
        Rule bad = Rule::standard();
        bad.set(Label::Xi, {RulePattern{{{Label::Xi, {0, 0}}}}});
        auto rep = validate_rule(bad, ScalingAssignment{});
        CHECK_FALSE(rep.normal);
        CHECK_FALSE(rep.violations.empty());

        ScalingAssignment s;
        s.reg_i = KappaValue(3);
        auto rep2 = validate_rule(Rule::standard(), s);
        CHECK_FALSE(rep2.subcritical);

        Rule not_closed;
        not_closed.set(Label::Xi, {RulePattern{}});
        not_closed.set(Label::I, {RulePattern{{{Label::Xi, {0, 0}}}}});
        CHECK_FALSE(validate_rule(not_closed, ScalingAssignment{}).normal);
    }
}

TEST_SUITE("basis")
{
    // Independent enumeration straight from the generating clauses of T: products of
    // elements of U = {I(Xi)^m X^l} with optional Xi or one/two elements of U'.
    std::set<std::string> brute_force(const Rational& kappa, const Rational& zeta_value)
    {
        std::vector<Symbol> U, Uprime{I1_xi()};
        for (int m = 0; m <= 12; ++m)
            for (int a = 0; a <= 4; ++a)
                for (int b = 0; b <= 8; ++b) U.push_back(I_xi().pow(m) * Symbol::x({a, b}));
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 4; ++b) Uprime.push_back(Symbol::x({a, b}));
        std::set<std::string> out;
        auto keep = [&](const Symbol& s) {
            if (s.homogeneity().at(kappa) < zeta_value) out.insert(s.str());
        };
        for (const auto& t : U) {
            keep(t);
            keep(t * Symbol::xi());
            for (std::size_t i = 0; i < Uprime.size(); ++i) {
                keep(t * Uprime[i]);
                for (std::size_t j = i; j < Uprime.size(); ++j) keep(t * Uprime[i] * Uprime[j]);
            }
        }
        return out;
    }

    TEST_CASE("count at the default cutoff")
    {
        auto basis = enumerate_basis(default_zeta(), default_kappa());
        CHECK(basis.size() == 50);
        std::set<std::string> mine;
        for (const auto& s : basis) mine.insert(s.str());
        CHECK(mine == brute_force(default_kappa(), default_zeta().at(default_kappa())));
        for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1].homogeneity() <= basis[i].homogeneity());
        CHECK(basis.front() == Symbol::xi());
    }

    TEST_CASE("sector counts")
    {
        const auto z = default_zeta();
        const auto k = default_kappa();
        CHECK(enumerate_basis(z, k, Sector::Xi).size() == 20);
        CHECK(enumerate_basis(z, k, Sector::I1Squared).size() == 14);
        CHECK(enumerate_basis(z, k, Sector::I1).size() == 10);
        CHECK(enumerate_basis(z, k, Sector::U).size() == 6);
        CHECK(enumerate_basis(KappaValue(0), k, Sector::U).empty());
    }

    TEST_CASE("negative part just above zero")
    {
        auto v = enumerate_basis(KappaValue::kappa(), Rational(1, 100), Sector::Xi);
        auto w = enumerate_basis(KappaValue::kappa(), Rational(1, 100), Sector::I1Squared);
        v.insert(v.end(), w.begin(), w.end());
        std::set<std::string> got;
        for (const auto& s : v) got.insert(s.str());
        for (const char* e : {"Xi", "Xi I(Xi)", "Xi I(Xi)^2", "Xi X[0,1]", "Xi I(Xi) X[0,1]", "Xi I(Xi)^3",
                              "I[0,1](Xi)^2", "I(Xi) I[0,1](Xi)^2", "I[0,1](Xi)^2 X[0,1]", "I(Xi)^2 I[0,1](Xi)^2"})
            CHECK(got.count(e) == 1);
        for (const auto& s : v) CHECK(s.homogeneity() < KappaValue::kappa());
    }

    TEST_CASE("rejects large kappa")
    {
        CHECK_THROWS(enumerate_basis(default_zeta(), Rational(1, 2)));
        CHECK_THROWS(enumerate_basis(default_zeta(), Rational(0)));
    }
}

TEST_SUITE("structure group")
{
    using RArr = std::array<Rational, 3>;

    TEST_CASE("explicit action")
    {
        RArr h{Rational(2), Rational(3), Rational(5)};
        auto g = gamma_action(h, I_xi());
        RationalSymbolSum expect(I_xi(), 1);
        expect.add(Symbol::one(), 5);
        CHECK(g == expect);
        RArr zero{0, 0, 0};
        for (const auto& s : enumerate_basis(default_zeta(), default_kappa()))
            CHECK(gamma_action(zero, s) == RationalSymbolSum(s, 1));
        CHECK(gamma_action(h, Symbol::one()) == RationalSymbolSum(Symbol::one(), 1));
        auto gx = gamma_action(h, Symbol::x({0, 2}));
        CHECK(gx.coefficient(Symbol::x({0, 1})) == 6);
        CHECK(gx.coefficient(Symbol::one()) == 9);
    }

    TEST_CASE("group law, triangularity and sector stability")
    {
        std::mt19937 gen(11);
        const auto basis = enumerate_basis(default_zeta(), default_kappa());
        for (const auto& tau : basis) {
            for (int rep = 0; rep < 3; ++rep) {
                RArr h{rnd_rational(gen), rnd_rational(gen), rnd_rational(gen)};
                RArr k{rnd_rational(gen), rnd_rational(gen), rnd_rational(gen)};
                RArr hk{h[0] + k[0], h[1] + k[1], h[2] + k[2]};
                CHECK(gamma_action(h, gamma_action(k, RationalSymbolSum(tau, 1))) == gamma_action(hk, tau));
                auto diff = gamma_action(h, tau);
                diff.add(tau, -1);
                const auto sector = decompose(tau)->sector;
                for (const auto& [s, c] : diff) {
                    CHECK(s.homogeneity() < tau.homogeneity());
                    CHECK(decompose(s)->sector == sector);
                }
            }
        }
    }

    TEST_CASE("multiplicative on admissible products")
    {
        std::mt19937 gen(3);
        RArr h{rnd_rational(gen), rnd_rational(gen), rnd_rational(gen)};
        const Symbol a = Symbol::xi() * I_xi();
        const Symbol b = I_xi() * Symbol::x({0, 1});
        RationalSymbolSum prod;
        for (const auto& [sa, ca] : gamma_action(h, a))
            for (const auto& [sb, cb] : gamma_action(h, b)) prod.add(sa * sb, ca * cb);
        CHECK(prod == gamma_action(h, a * b));
    }
}
