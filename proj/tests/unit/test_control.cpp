#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <algorithm>
#include <random>

#include "certsolve/control.hpp"
#include "certsolve/errors.hpp"
#include "certsolve/polytext.hpp"
#include "certsolve/zdsolve.hpp"
#include "oracles.hpp"

using namespace certsolve;
using oracle::eval_complex;
using oracle::grid_norm;

namespace {

using oracle::cd;

const std::vector<std::string> kZ{"z1", "z2"};
const std::vector<std::string> kZU{"z1", "z2", "u1", "u2"};
const char* kFamily = "u2*z1*z2 - u1*z2 - u2*z1 + z1*z2 - z1 + 1";

OdeModel toy_model() {
    const std::vector<std::string> ring{"x", "mu"};
    return OdeModel{{"x"}, {"mu"}, parse_poly("x^2 + x", ring), {parse_poly("mu^2*x", ring)}, {}, "y"};
}

Rational dec(const char* s) { return parse_poly(s, {}).constant_value(); }

// ---- numeric oracles

// Smallest |z2| over roots of D(z1, .) for z1 on a polar grid of the closed disk;
// 0 when D(z1, .) vanishes identically there. Degree in z2 must be at most 2.
double min_root_modulus(const MultiPoly& d) {
    const auto dense = d.to_dense("z2");
    double best = 1e300;
    for (int ri = 0; ri <= 40; ++ri)
        for (int ai = 0; ai < 180; ++ai) {
            const cd z1 = std::polar(ri / 40.0, 2 * M_PI * ai / 180.0);
            std::vector<cd> c;
            for (const auto& p : dense) c.push_back(eval_complex(p, {{"z1", z1}}));
            while (c.size() > 1 && std::abs(c.back()) < 1e-12) c.pop_back();
            if (c.size() == 1) {
                if (std::abs(c[0]) < 1e-12) return 0.0;
                continue;
            }
            if (c.size() == 2) {
                best = std::min(best, std::abs(-c[0] / c[1]));
            } else {
                const cd disc = std::sqrt(c[1] * c[1] - 4.0 * c[2] * c[0]);
                best = std::min({best, std::abs((-c[1] + disc) / (2.0 * c[2])), std::abs((-c[1] - disc) / (2.0 * c[2]))});
            }
        }
    return best;
}

TransferMatrix matrix(const std::vector<std::vector<std::string>>& text) {
    TransferMatrix g;
    for (const auto& row : text) {
        g.emplace_back();
        for (const auto& t : row) g.back().push_back(parse_ratfunc(t, {"s"}));
    }
    return g;
}

}  // namespace

// ---------------------------------------------------------------- prolongation

TEST(Prolong, ToyModelSystem) {
    auto eqs = prolong_ode(toy_model(), 2);
    const std::vector<std::string> ring{"y_0", "y_1", "y_2", "mu", "x_0", "x_1", "x_2"};
    ASSERT_EQ(eqs.size(), 5u);
    EXPECT_EQ(eqs[0], parse_poly("y_0 - x_0^2 - x_0", ring));
    EXPECT_EQ(eqs[1], parse_poly("y_1 - 2*x_0*x_1 - x_1", ring));
    EXPECT_EQ(eqs[2], parse_poly("y_2 - 2*x_1*x_1 - 2*x_0*x_2 - x_2", ring));
    EXPECT_EQ(eqs[3], parse_poly("x_1 - mu^2*x_0", ring));
    EXPECT_EQ(eqs[4], parse_poly("x_2 - mu^2*x_1", ring));
}

TEST(Prolong, OrderZeroAndLinearChain) {
    auto eqs0 = prolong_ode(toy_model(), 0);
    ASSERT_EQ(eqs0.size(), 1u);
    EXPECT_EQ(eqs0[0], parse_poly("y_0 - x_0^2 - x_0", {"y_0", "x_0"}));

    const OdeModel lin{{"x"}, {}, parse_poly("x", {"x"}), {parse_poly("x", {"x"})}, {}, "y"};
    auto eqs1 = prolong_ode(lin, 1);
    const std::vector<std::string> ring{"y_0", "y_1", "x_0", "x_1"};
    ASSERT_EQ(eqs1.size(), 3u);
    EXPECT_EQ(eqs1[0], parse_poly("y_0 - x_0", ring));
    EXPECT_EQ(eqs1[1], parse_poly("y_1 - x_1", ring));
    EXPECT_EQ(eqs1[2], parse_poly("x_1 - x_0", ring));
}

TEST(Prolong, PrefixStable) {
    const std::vector<std::string> ring{"a", "b", "k"};
    const OdeModel m{{"a", "b"}, {"k"}, parse_poly("a*b + k", ring), {parse_poly("-k*a*b", ring), parse_poly("a - b^2", ring)}, {}, "y"};
    for (int h = 0; h < 4; ++h) {
        auto lo = prolong_ode(m, h), hi = prolong_ode(m, h + 1);
        for (int j = 0; j <= h; ++j) EXPECT_EQ(lo[static_cast<std::size_t>(j)], hi[static_cast<std::size_t>(j)]) << "h=" << h << " j=" << j;
    }
}

TEST(Prolong, RejectsInvalidModels) {
    OdeModel bad = toy_model();
    bad.dynamics.clear();
    EXPECT_THROW(prolong_ode(bad, 1), InvalidInput);
    EXPECT_THROW(prolong_ode(toy_model(), -1), InvalidInput);
    OdeModel ctl = toy_model();
    ctl.controls = {"u"};
    EXPECT_THROW(prolong_ode(ctl, 1), UnsupportedInput);
}

// ---------------------------------------------------------------- identification

TEST(Interpolation, ReproducesDataAndRejectsRepeats) {
    std::vector<DataPoint> data{{Rational(0), Rational(1)}, {Rational(1), Rational(3)}, {Rational(2), Rational(11)}, {Rational(-1), Rational(5)}};
    UniPoly p = newton_interpolation(data);
    EXPECT_LE(p.degree(), 3);
    for (const auto& d : data) EXPECT_EQ(p.eval(d.t), d.y);
    data.push_back({Rational(1), Rational(0)});
    EXPECT_THROW(newton_interpolation(data), InvalidInput);
}

// x' = mu, y = x + x^2 has the exact solution x = x0 + mu t, so exact samples of
// y are polynomial data.
TEST(Identification, RecoversPlantedExactSolution) {
    const std::vector<std::string> ring{"x", "mu"};
    const OdeModel m{{"x"}, {"mu"}, parse_poly("x + x^2", ring), {parse_poly("mu", ring)}, {}, "y"};
    const Rational mu(1, 3), x0(1, 2);
    std::vector<DataPoint> data;
    for (int i = 0; i < 5; ++i) {
        const Rational t(i, 2);
        const Rational x = x0 + mu * t;
        data.push_back({t, x + x * x});
    }
    auto cands = identify_parameters(m, data, 2, Rational(0));
    ASSERT_FALSE(cands.empty());
    bool found = false;
    for (const auto& c : cands) {
        EXPECT_EQ(c.names, (std::vector<std::string>{"mu", "x_0"}));
        found = found || (c.values[0].contains(mu) && c.values[1].contains(x0));
        EXPECT_LT(c.fit_residual, 1e-20);
    }
    EXPECT_TRUE(found);

    // Every equation of the substituted system vanishes somewhere in each box.
    auto eqs = prolong_ode(m, 2);
    Assignment ys{{"y_0", Rational(3, 4)}, {"y_1", Rational(2, 3)}, {"y_2", Rational(2, 9)}};
    for (const auto& c : cands)
        for (const auto& e : eqs) EXPECT_TRUE(iv_eval(e.specialize(ys).with_vars(c.box_vars), c.box_vars, c.box.coords, 96).contains_zero());
}

TEST(Identification, ToySubstitutedSystemHasFourSolutions) {
    auto cands = identify_from_derivatives(toy_model(), 2, {Rational(1), dec("0.608"), dec("0.227")}, {}, Rational(0));
    ASSERT_EQ(cands.size(), 4u);
    for (const auto& c : cands) {
        // x0 solves x0^2 + x0 = 1 and mu^2 x0 (2 x0 + 1) = 0.608.
        const MPInterval& m = c.values[0];
        const MPInterval& x = c.values[1];
        EXPECT_TRUE((x * x + x - MPInterval(Rational(1))).contains_zero());
        EXPECT_TRUE((m * m * x * (MPInterval(Rational(2)) * x + MPInterval(Rational(1))) - MPInterval(dec("0.608"))).contains_zero());
    }
}

// Cubic interpolation of two-decimal data is a rough derivative estimate: x0 is
// recovered well, mu only to about 2e-2.
TEST(Identification, FourPointDataRanksPositiveSolutionFirst) {
    std::vector<DataPoint> data{{dec("0"), dec("2")}, {dec("0.33"), dec("2.40")}, {dec("0.67"), dec("2.89")}, {dec("1"), dec("3.49")}};
    auto all = identify_parameters(toy_model(), data, 2, Rational(0));
    EXPECT_EQ(all.size(), 4u);
    IdentificationOptions opts;
    opts.nonnegative_only = true;
    auto pos = identify_parameters(toy_model(), data, 2, Rational(0), opts);
    ASSERT_EQ(pos.size(), 1u);
    EXPECT_NEAR(pos[0].values[0].midpoint().to_double(), 0.6, 2e-2);
    EXPECT_NEAR(pos[0].values[1].midpoint().to_double(), 1.0, 1e-9);
}

// Taylor coefficients of (7.40 t + 54.02) / (1.52 t^2 - 10.93 t + 27.01) at 0.
TEST(Identification, RationalInterpolantDerivatives) {
    const Rational n0 = dec("54.02"), n1 = dec("7.40"), d0 = dec("27.01"), d1 = dec("-10.93"), d2 = dec("1.52");
    const Rational c0 = n0 / d0, c1 = (n1 - d1 * c0) / d0, c2 = (-d1 * c1 - d2 * c0) / d0;
    auto cands = identify_from_derivatives(toy_model(), 2, {c0, c1, Rational(2) * c2}, {}, Rational(0));
    ASSERT_EQ(cands.size(), 4u);
    std::vector<std::pair<double, double>> got;
    for (const auto& c : cands) got.emplace_back(std::abs(c.values[0].midpoint().to_double()), c.values[1].midpoint().to_double());
    std::sort(got.begin(), got.end());
    EXPECT_NEAR(got[0].first, 0.427, 5e-3);
    EXPECT_NEAR(got[0].second, -2.0, 1e-9);
    EXPECT_NEAR(got[3].first, 0.604, 5e-3);
    EXPECT_NEAR(got[3].second, 1.0, 1e-9);
}

TEST(Identification, NotEnoughData) {
    std::vector<DataPoint> data{{Rational(0), Rational(2)}, {Rational(1), Rational(3)}};
    EXPECT_THROW(identify_parameters(toy_model(), data, 2, Rational(0)), InvalidInput);
}

// ---------------------------------------------------------------- stability

TEST(DiskStability, SmallCases) {
    EXPECT_TRUE(unit_disk_stability_1d(parse_unipoly("z - 2", "z")));
    EXPECT_FALSE(unit_disk_stability_1d(parse_unipoly("2*z - 1", "z")));
    EXPECT_FALSE(unit_disk_stability_1d(parse_unipoly("z^2 - 3/2*z + 9/16", "z")));
    EXPECT_FALSE(unit_disk_stability_1d(parse_unipoly("z + 1", "z")));
    EXPECT_FALSE(unit_disk_stability_1d(parse_unipoly("z - 1", "z")));
    EXPECT_FALSE(unit_disk_stability_1d(parse_unipoly("z^2 + 1", "z")));
    EXPECT_TRUE(unit_disk_stability_1d(parse_unipoly("z^2 + 4", "z")));
    EXPECT_TRUE(unit_disk_stability_1d(parse_unipoly("7", "z")));
    EXPECT_THROW(unit_disk_stability_1d(UniPoly()), InvalidInput);
}

// Products of known factors: real roots r and conjugate pairs of modulus rho.
TEST(DiskStability, MatchesKnownModuli) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9), kind(0, 2), count(1, 4);
    int stable = 0;
    for (int trial = 0; trial < 150; ++trial) {
        UniPoly p = UniPoly::constant(1, "z");
        double min_mod = 1e9;
        for (int f = count(rng); f > 0; --f) {
            const Rational a(num(rng), den(rng));
            if (kind(rng) == 0) {
                const Rational b(num(rng) == 0 ? 1 : num(rng), den(rng));
                // z^2 - 2 a z + a^2 + b^2
                p = p * UniPoly(std::vector<Rational>{a * a + b * b, Rational(-2) * a, Rational(1)}, "z");
                min_mod = std::min(min_mod, std::sqrt((a * a + b * b).to_double()));
            } else {
                p = p * UniPoly(std::vector<Rational>{-a, Rational(1)}, "z");
                min_mod = std::min(min_mod, std::abs(a.to_double()));
            }
        }
        if (std::abs(min_mod - 1.0) < 1e-12) continue;
        const bool expect = min_mod > 1.0;
        stable += expect;
        EXPECT_EQ(unit_disk_stability_1d(p), expect) << p;
    }
    EXPECT_GT(stable, 5);
}

TEST(Moebius, Examples) {
    const std::vector<std::string> xs{"x1", "x2"};
    auto a = moebius_split(parse_poly("z1*z2 - 4", kZ), kZ, xs);
    EXPECT_EQ(a.re, parse_poly("-3*x1*x2 + 3", xs));
    EXPECT_EQ(a.im, parse_poly("-5*x1 - 5*x2", xs));
    auto b = moebius_split(parse_poly("z1 - 1", kZ), kZ, xs);
    EXPECT_TRUE(b.re.is_zero());
    EXPECT_EQ(b.im, MultiPoly(-2L));
    auto c = moebius_split(parse_poly("z1 + 1", kZ), kZ, xs);
    EXPECT_EQ(c.re, parse_poly("2*x1", xs));
    EXPECT_TRUE(c.im.is_zero());
}

// The numerator of D((x - i)/(x + i)) vanishes exactly where D does on the circle.
TEST(Moebius, ImageOfRealPointsIsOnTorus) {
    const std::vector<std::string> xs{"x1", "x2"};
    MultiPoly d = parse_poly("3*z1^2*z2 - z1*z2 + 2*z2 - 5", kZ);
    auto ri = moebius_split(d, kZ, xs);
    for (double x1 : {-2.0, 0.3, 1.7})
        for (double x2 : {-0.5, 0.0, 4.0}) {
            const cd z1 = (x1 - cd(0, 1)) / (x1 + cd(0, 1)), z2 = (x2 - cd(0, 1)) / (x2 + cd(0, 1));
            const cd lhs = eval_complex(d, {{"z1", z1}, {"z2", z2}}) * std::pow(x1 + cd(0, 1), 2) * (x2 + cd(0, 1));
            const cd rhs = eval_complex(ri.re, {{"x1", x1}, {"x2", x2}}) + cd(0, 1) * eval_complex(ri.im, {{"x1", x1}, {"x2", x2}});
            EXPECT_LT(std::abs(lhs - rhs), 1e-9);
        }
}

TEST(Stability2d, Examples) {
    EXPECT_TRUE(stability_2d(parse_poly("z1*z2 - 4", kZ)));
    EXPECT_FALSE(stability_2d(parse_poly("2*z1*z2 - 1", kZ)));
    // Zero on the torus away from the edges: z1 = z2 = -1.
    EXPECT_FALSE(stability_2d(parse_poly("z1 + z2 + 2", kZ)));
    const MultiPoly ex2 = parse_poly(kFamily, kZU);
    EXPECT_TRUE(stability_2d(ex2.specialize({{"u1", Rational(0)}, {"u2", Rational(-1)}}).compacted()));
}

TEST(Stability2d, AgreesWithTorusSampling) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-2, 2), c0(3, 9), sign(0, 1);
    int checked = 0, stable = 0, skipped = 0;
    for (int trial = 0; checked < 50 && trial < 400; ++trial) {
        std::map<Exponent, Rational> terms;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j)
                if (i + j > 0 && i + j <= 3) terms[{i, j}] = Rational(coef(rng));
        terms[{0, 0}] = Rational(sign(rng) ? c0(rng) : -c0(rng));
        for (auto it = terms.begin(); it != terms.end();) it = it->second.is_zero() ? terms.erase(it) : std::next(it);
        const MultiPoly d = MultiPoly::from_terms(kZ, terms);
        if (d.degree("z2") < 1) continue;
        const double m = min_root_modulus(d);
        if (std::abs(m - 1.0) < 0.03) continue;
        bool verdict = false;
        try {
            verdict = stability_2d(d);
        } catch (const UnsupportedInput&) {
            ++skipped;
            continue;
        }
        EXPECT_EQ(verdict, m > 1.0) << d << " min modulus " << m;
        ++checked;
        stable += verdict;
    }
    EXPECT_EQ(checked, 50);
    EXPECT_GT(stable, 3);
    EXPECT_LT(skipped, 10);
}

TEST(StabilityParametric, FamilyHasOneStableCell) {
    const MultiPoly d = parse_poly(kFamily, kZU);
    auto v = stability_parametric(d, {"u1", "u2"});
    int stable = 0;
    for (const auto& c : v.cells) stable += c.stable;
    EXPECT_EQ(stable, 1);
    for (const auto& c : v.cells)
        if (c.stable) {
            // The stable cell contains (0, -1): every boundary polynomial has equal sign there.
            for (const auto& p : v.boundary) {
                Assignment a{{"u1", c.point[0]}, {"u2", c.point[1]}}, b{{"u1", Rational(0)}, {"u2", Rational(-1)}};
                EXPECT_EQ(p.evaluate(a).sign(), p.evaluate(b).sign()) << p;
            }
        }
}

TEST(StabilityParametric, ScalingInvariance) {
    const MultiPoly d = parse_poly(kFamily, kZU);
    auto v1 = stability_parametric(d, {"u1", "u2"});
    auto v2 = stability_parametric(Rational(-7, 3) * d, {"u1", "u2"});
    ASSERT_EQ(v1.cells.size(), v2.cells.size());
    for (std::size_t i = 0; i < v1.cells.size(); ++i) {
        EXPECT_EQ(v1.cells[i].point, v2.cells[i].point);
        EXPECT_EQ(v1.cells[i].stable, v2.cells[i].stable);
    }
}

TEST(StabilityParametric, ParameterFreeGivesSingleCell) {
    const MultiPoly d = parse_poly("z1*z2 - 4", {"z1", "z2", "u"});
    auto v = stability_parametric(d, {"u"});
    ASSERT_EQ(v.cells.size(), 1u);
    EXPECT_TRUE(v.cells[0].stable);
}

TEST(StabilityParametric, ProductFamilyAgreesWithSampling) {
    const MultiPoly d = parse_poly("z1*z2 - u", {"z1", "z2", "u"});
    auto v = stability_parametric(d, {"u"});
    ASSERT_GE(v.cells.size(), 2u);
    for (const auto& c : v.cells) {
        const MultiPoly spec = d.specialize({{"u", c.point[0]}}).compacted();
        EXPECT_EQ(c.stable, min_root_modulus(spec.with_vars(kZ)) > 1.0) << c.point[0];
    }
    for (const auto& c : v.cells) EXPECT_EQ(c.stable, std::abs(c.point[0].to_double()) > 1.0);
}

// ---------------------------------------------------------------- H-infinity

TEST(Hinf, ConstantMatrix) {
    auto r = hinf_norm(matrix({{"-3/7"}}));
    EXPECT_TRUE(r.contains(Rational(3, 7)));
    EXPECT_TRUE(hinf_norm(matrix({{"0", "0"}})).is_point());
    auto c2 = hinf_norm(matrix({{"3", "0"}, {"0", "4"}}), "s", 20);
    EXPECT_TRUE(c2.contains(Rational(4)));
}

TEST(Hinf, GoldenRatioMatrix) {
    const TransferMatrix g = matrix({{"s/(s+1)", "-s/(s+1)"}, {"-s/(s+1)", "1/(s+1)"}});
    auto res = hinf_norm_detailed(g, "s", 10);
    const std::vector<std::string> wg{"omega", "gamma"};
    const MultiPoly expect = parse_poly("omega^2*(gamma^4 - 3*gamma^2 + 1) + gamma^2*(gamma^2 - 1)", wg);
    EXPECT_TRUE(res.curve == expect || res.curve == -expect) << res.curve;
    const double phi = (1 + std::sqrt(5.0)) / 2;
    EXPECT_LE(res.norm.width().to_double(), std::ldexp(1.0, -10));
    EXPECT_LE(res.norm.lower().to_double(), phi);
    EXPECT_GE(res.norm.upper().to_double(), phi);
    auto coarse = hinf_norm(g);
    EXPECT_LE(coarse.lower().to_double(), phi);
    EXPECT_GE(coarse.upper().to_double(), phi);
}

TEST(Hinf, RejectsImproperAndImaginaryPoles) {
    EXPECT_THROW(hinf_norm(matrix({{"1/(s^2 + 1)"}})), InvalidInput);
    EXPECT_THROW(hinf_norm(matrix({{"s^2/(s + 1)"}})), InvalidInput);
    EXPECT_NO_THROW(hinf_norm(matrix({{"1/(s^2 + s + 1)"}})));
}

TEST(Hinf, ContainsGridMaximum) {
    const std::vector<std::vector<std::vector<std::string>>> cases{
        {{"1/(s^2 + s/5 + 1)"}},
        {{"(s + 2)/(s^2 + 3*s + 2)"}},
        {{"10/(s + 3)", "s/(s^2 + 2*s + 5)"}},
        {{"1/(s + 1)"}, {"(s - 1)/(s^2 + s + 4)"}},
        {{"s/(s+1)", "-s/(s+1)"}, {"-s/(s+1)", "1/(s+1)"}},
        {{"(s^2 + 1/2)/(s^2 + s/2 + 2)", "1/(s + 2)"}, {"0", "3/(s^2 + s + 3)"}},
    };
    for (const auto& text : cases) {
        const TransferMatrix g = matrix(text);
        const MPInterval r = hinf_norm(g, "s", 16);
        const double oracle = grid_norm(g);
        // The grid value is a lower bound of the norm; it lies below the true
        // maximum by the discretization error of the grid.
        EXPECT_GE(r.upper().to_double(), oracle - 1e-12) << text[0][0];
        EXPECT_LE(r.lower().to_double(), oracle + 1e-5) << text[0][0];
        EXPECT_LE(r.width().to_double(), std::ldexp(1.0, -16));
    }
}
