#include <gtest/gtest.h>

#include <random>

#include "certsolve/errors.hpp"
#include "certsolve/multipoly.hpp"
#include "certsolve/polytext.hpp"
#include "oracles.hpp"

using namespace certsolve;

namespace {

const std::vector<std::string> kVars{"X", "u", "v"};

MultiPoly P(const std::string& s) { return parse_poly(s, kVars); }

MultiPoly random_param_poly(std::mt19937& rng, int deg, bool monic_in_x) {
    std::uniform_int_distribution<int> c(-3, 3);
    std::uniform_int_distribution<int> pick(0, 2);
    MultiPoly out(kVars);
    const MultiPoly X = MultiPoly::variable("X", kVars);
    const MultiPoly u = MultiPoly::variable("u", kVars);
    const MultiPoly v = MultiPoly::variable("v", kVars);
    for (int k = 0; k <= deg; ++k) {
        MultiPoly coef = MultiPoly(Rational(c(rng)), kVars);
        if (pick(rng) == 0) coef += Rational(c(rng)) * u;
        if (pick(rng) == 0) coef += Rational(c(rng)) * v;
        if (k == deg && coef.is_zero()) coef = monic_in_x ? MultiPoly(Rational(1), kVars) : u + MultiPoly(Rational(1), kVars);
        out += coef * pow(X, static_cast<unsigned>(k));
    }
    return out;
}

}  // namespace

TEST(MultiPoly, ArithmeticAndPrinting) {
    MultiPoly a = P("(X + u)^2");
    EXPECT_EQ(a, P("X^2 + 2*X*u + u^2"));
    EXPECT_EQ(a.to_string(), "X^2 + 2*X*u + u^2");
    EXPECT_EQ(P("X*u - 1/2").to_string(), "X*u - 1/2");
    EXPECT_EQ(parse_poly(a.to_string(), kVars), a);
    EXPECT_EQ(a.degree("X"), 2);
    EXPECT_EQ(a.coeff("X", 1), P("2*u"));
    EXPECT_EQ(a.partial_derivative("u"), P("2*X + 2*u"));
    EXPECT_EQ(P("X^2 + u").specialize({{"u", Rational(-2)}}), parse_poly("X^2 - 2", {"X"}));
    EXPECT_EQ(exact_div(P("X^2 - u^2"), P("X - u")), P("X + u"));
    EXPECT_THROW(exact_div(P("X^2 + u"), P("X - u")), InternalError);
}

TEST(MultiPoly, ParserErrors) {
    EXPECT_THROW(P("X +"), ParseError);
    EXPECT_THROW(P("X ^ u"), ParseError);
    EXPECT_THROW(P("w + 1"), ParseError);
    EXPECT_THROW(P("1/X"), ParseError);
    EXPECT_THROW(P("(X"), ParseError);
    EXPECT_EQ(P("(X^2 - 1)/(X - 1)"), P("X + 1"));
    EXPECT_EQ(P("0.5*X + 1.5e1"), P("1/2*X + 15"));
    RatFunc r = parse_ratfunc("X/(X+1) - 1", kVars);
    EXPECT_EQ(r.num, P("-1"));
    EXPECT_EQ(r.den, P("X + 1"));
}

TEST(MultiPoly, GcdAndSquarefree) {
    EXPECT_EQ(gcd(P("(X - u)^2*(X + v)"), P("(X - u)*(X^2 + 1)")), P("X - u"));
    EXPECT_EQ(gcd(P("u*X + u*v"), P("u^2")), P("u"));
    EXPECT_EQ(squarefree_part(P("(X - u)^3*(u + 1)^2")), P("(X - u)*(u + 1)"));
    auto base = coprime_base({P("(u - 1)*(u + 1)"), P("(u - 1)*u"), P("3")});
    ASSERT_EQ(base.size(), 3U);
}

TEST(Subresultant, SpecExamples) {
    auto s = subresultant_sequence(P("X^2 + u"), P("2*X"), "X");
    EXPECT_EQ(s.entries[0], P("4*u"));
    EXPECT_TRUE(subresultant_sequence(P("X^2 - 1"), P("X - 1"), "X").entries[0].is_zero());
    EXPECT_EQ(resultant(P("X - u"), P("X - v"), "X"), P("u - v"));
    EXPECT_EQ(discriminant(P("X^2 + u"), "X"), P("-4*u"));
    EXPECT_EQ(discriminant(P("X^3 + u*X + v"), "X"), P("-4*u^3 - 27*v^2"));
    EXPECT_THROW(subresultant_sequence(P("u"), P("v"), "w"), InvalidInput);
}

TEST(SturmHabicht, SpecExamples) {
    EXPECT_EQ(tarski_query(sturm_habicht_sequence(P("X^2 - 2"), P("1"), "X"), {}), 2);
    EXPECT_EQ(tarski_query(sturm_habicht_sequence(P("X^2 - 1"), P("X"), "X"), {}), 0);
    EXPECT_EQ(tarski_query(sturm_habicht_sequence(P("X^3 - 3*X"), P("1"), "X"), {}), 3);
    auto sh = sturm_habicht_sequence(P("X^2 + u"), P("1"), "X");
    EXPECT_EQ(tarski_query(sh, {{"u", Rational(1)}}), 0);
    EXPECT_EQ(tarski_query(sh, {{"u", Rational(-1)}}), 2);
    EXPECT_EQ(tarski_query(sh, {{"u", Rational(0)}}), 1);
    EXPECT_THROW(tarski_query(sh, {}), InvalidInput);
    // Leading coefficient vanishes at u = 0: u*X^2 + X - 1 becomes X - 1.
    auto deg = sturm_habicht_sequence(P("u*X^2 + X - 1"), P("1"), "X");
    EXPECT_EQ(tarski_query(deg, {{"u", Rational(0)}}), 1);
    EXPECT_EQ(tarski_query(deg, {{"u", Rational(1)}}), 2);
    EXPECT_THROW(tarski_query(sturm_habicht_sequence(P("u*X"), P("1"), "X"), {{"u", Rational(0)}}), InvalidInput);
}

// Specialized subresultants equal the determinantal definition (hence agree with the
// Euclidean remainder sequence up to scalars); the lowest nonzero entry is proportional
// to the gcd; Tarski queries with P2 = 1 match real-root counts.
TEST(Subresultant, SpecializationProperty) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dp(2, 4);
    std::uniform_int_distribution<int> val(-4, 4);
    int degenerate = 0;
    for (int pair = 0; pair < 50; ++pair) {
        const int p = dp(rng);
        std::uniform_int_distribution<int> dq(1, p);
        const int q = dq(rng);
        MultiPoly a = random_param_poly(rng, p, pair % 2 == 0);
        MultiPoly b = random_param_poly(rng, q, true);
        // Plant a parametric common factor in some pairs so that resultants vanish somewhere.
        if (pair % 5 == 0) {
            a = a * P("X - u");
            b = b * P("X - u");
        }
        auto seq = subresultant_sequence(a, b, "X");
        auto sh = sturm_habicht_sequence(a, P("1"), "X");
        for (int pt = 0; pt < 10; ++pt) {
            Assignment at{{"u", Rational(val(rng))}, {"v", Rational(val(rng))}};
            UniPoly sa = a.specialize(at).to_unipoly("X");
            UniPoly sb = b.specialize(at).to_unipoly("X");
            if (sa.degree() != a.degree("X") || sb.degree() != b.degree("X")) {
                ++degenerate;
                continue;
            }
            const int pa = sa.degree();
            const int qb = sb.degree();
            for (int j = 0; j < std::min(pa, qb); ++j) {
                UniPoly got = seq.entries[static_cast<std::size_t>(j)].specialize(at).to_unipoly("X");
                ASSERT_EQ(got, oracle::sylvester_subres(sa, sb, j)) << "pair " << pair << " j " << j;
            }
            // Resultant vanishes iff a common root exists.
            const bool common = gcd(sa, sb).degree() > 0;
            EXPECT_EQ(seq.entries[0].specialize(at).is_zero(), common);
            // Lowest nonzero entry is proportional to the gcd.
            UniPoly g = gcd(sa, sb);
            for (std::size_t j = 0; j < seq.entries.size(); ++j) {
                UniPoly e = seq.entries[j].specialize(at).to_unipoly("X");
                if (e.is_zero()) continue;
                EXPECT_EQ(e.primitive(), g.primitive()) << "pair " << pair;
                break;
            }
            EXPECT_EQ(tarski_query(sh, at), count_real_roots(sa));
        }
    }
    EXPECT_LT(degenerate, 250);
}

TEST(Subresultant, EqualAndReversedDegrees) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const int p = 2 + trial % 3;
        const int q = trial % 2 == 0 ? p : p + 1;
        std::vector<Rational> ca, cb;
        for (int k = 0; k < p; ++k) ca.emplace_back(c(rng));
        ca.emplace_back(1 + std::abs(c(rng)));
        for (int k = 0; k < q; ++k) cb.emplace_back(c(rng));
        cb.emplace_back(-1 - std::abs(c(rng)));
        UniPoly a(ca, "X"), b(cb, "X");
        auto seq = subresultant_sequence(MultiPoly::from_unipoly(a), MultiPoly::from_unipoly(b), "X");
        for (int j = 0; j < std::min(p, q); ++j)
            ASSERT_EQ(seq.entries[static_cast<std::size_t>(j)].to_unipoly("X"), oracle::sylvester_subres(a, b, j)) << trial << " " << j;
    }
}
