#include <gtest/gtest.h>

#include "certsolve/errors.hpp"
#include "certsolve/groebner.hpp"
#include "certsolve/polytext.hpp"
#include "fixtures.hpp"

using namespace certsolve;

namespace {

const std::vector<std::string> kXY{"X", "Y"};

MultiPoly P(const std::string& s, const std::vector<std::string>& vars = kXY) { return parse_poly(s, vars); }

// Buchberger criterion plus membership of every input.
void expect_groebner(const std::vector<MultiPoly>& input, const GroebnerBasis& gb) {
    const auto& g = gb.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_EQ(g[i].lex_leading_coeff().sign() != 0, true);
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            EXPECT_TRUE(normal_form(s_polynomial(g[i], g[j], gb.vars(), gb.order()), gb).is_zero())
                << g[i] << " / " << g[j];
            EXPECT_FALSE(std::equal(gb.leading_monomials()[i].begin(), gb.leading_monomials()[i].end(),
                                    gb.leading_monomials()[j].begin()));
        }
    }
    for (const auto& f : input) EXPECT_TRUE(normal_form(f, gb).is_zero()) << f;
}

}  // namespace

TEST(Groebner, AlreadyReducedExample) {
    auto gb = buchberger({P("X^2 - 1"), P("Y - X")}, kXY, MonomialOrder::degrevlex());
    ASSERT_EQ(gb.generators().size(), 2U);
    EXPECT_EQ(normal_form(P("X^2 - 1"), gb), P("0"));
    EXPECT_TRUE(is_zero_dimensional(gb));
    EXPECT_EQ(quotient_basis(gb).size(), 2U);
    auto lex = buchberger({P("X^2 - 1"), P("Y - X")}, kXY, MonomialOrder::lex());
    EXPECT_EQ(lex.generators()[0], P("Y^2 - 1"));
    EXPECT_EQ(lex.generators()[1], P("X - Y"));
    // X is the larger variable, so X reduces to Y.
    EXPECT_EQ(normal_form(P("X"), lex), P("Y"));
}

TEST(Groebner, NormalFormWithYLeading) {
    const std::vector<std::string> yx{"Y", "X"};
    auto gb = buchberger({P("X^2 - 1", yx), P("Y - X", yx)}, yx, MonomialOrder::lex());
    EXPECT_EQ(normal_form(P("Y", yx), gb), P("X", yx));
}

TEST(Groebner, TrivialCases) {
    auto unit = buchberger({P("X"), P("X + 1")}, kXY);
    EXPECT_TRUE(unit.is_unit());
    EXPECT_TRUE(is_zero_dimensional(unit));
    EXPECT_TRUE(quotient_basis(unit).empty());
    EXPECT_TRUE(normal_form(P("1"), unit).is_zero());
    auto single = buchberger({P("X - 3", {"X"})});
    ASSERT_EQ(single.generators().size(), 1U);
    EXPECT_EQ(single.generators()[0], P("X - 3", {"X"}));
    auto curve = buchberger({P("X*Y - 1")}, kXY);
    EXPECT_FALSE(is_zero_dimensional(curve));
    EXPECT_THROW(quotient_basis(curve), UnsupportedInput);
}

TEST(Groebner, CriterionAndMembershipOnFixtures) {
    for (const auto& fx : fixtures::systems()) {
        std::vector<MultiPoly> sys;
        for (const auto& e : fx.eqs) sys.push_back(parse_poly(e, fx.vars));
        for (auto ord : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
            auto gb = buchberger(sys, fx.vars, ord);
            expect_groebner(sys, gb);
            for (const auto& g : gb.generators()) EXPECT_EQ(leading_monomial(g, gb.vars(), ord).size(), fx.vars.size());
        }
    }
}

TEST(Groebner, QuotientDimensionCountsSolutions) {
    // Cyclic-3: 6 solutions; X^2+Y^2=4, XY=1: 4 solutions.
    auto c3 = buchberger({P("X + Y + Z", {"X", "Y", "Z"}), P("X*Y + Y*Z + Z*X", {"X", "Y", "Z"}), P("X*Y*Z - 1", {"X", "Y", "Z"})});
    EXPECT_EQ(quotient_basis(c3).size(), 6U);
    auto circ = buchberger({P("X^2 + Y^2 - 4"), P("X*Y - 1")}, kXY);
    EXPECT_EQ(quotient_basis(circ).size(), 4U);
    // Double root counts twice.
    auto dbl = buchberger({P("(X - 1)^2"), P("Y")}, kXY);
    EXPECT_EQ(quotient_basis(dbl).size(), 2U);
}

TEST(Groebner, EliminationIdeal) {
    const std::vector<std::string> xu{"X", "u"};
    auto e1 = elimination_ideal({P("X^2 + u", xu), P("X", xu)}, {"u"});
    ASSERT_EQ(e1.size(), 1U);
    EXPECT_EQ(e1[0], P("u", {"u"}));
    EXPECT_TRUE(elimination_ideal({P("X - u", xu)}, {"u"}).empty());
    auto e3 = elimination_ideal({P("X^2 - u", xu), P("X - 1", xu)}, {"u"});
    ASSERT_EQ(e3.size(), 1U);
    EXPECT_EQ(e3[0], P("u - 1", {"u"}));
    // Twisted cubic: eliminating t from (t, t^2, t^3) gives Y = X^2, Z = X^3 relations.
    const std::vector<std::string> txyz{"t", "X", "Y", "Z"};
    auto tc = elimination_ideal({P("X - t", txyz), P("Y - t^2", txyz), P("Z - t^3", txyz)}, {"X", "Y", "Z"});
    for (const auto& g : tc) {
        EXPECT_FALSE(g.depends_on("t"));
        EXPECT_TRUE(g.specialize({{"X", Rational(2)}, {"Y", Rational(4)}, {"Z", Rational(8)}}).is_zero());
    }
    EXPECT_GE(tc.size(), 2U);
}
