#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "certsolve/errors.hpp"
#include "certsolve/paramspace.hpp"
#include "certsolve/polytext.hpp"
#include "certsolve/zdsolve.hpp"

using namespace certsolve;

namespace {

std::vector<MultiPoly> polys(const std::vector<std::string>& text, const std::vector<std::string>& vars) {
    std::vector<MultiPoly> out;
    for (const auto& t : text) out.push_back(parse_poly(t, vars));
    return out;
}

std::vector<int> sign_vector(const std::vector<MultiPoly>& ps, const Assignment& at) {
    std::vector<int> s;
    for (const auto& p : ps) s.push_back(p.evaluate(at).sign());
    return s;
}

std::size_t real_solution_count(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars,
                                const Assignment& at) {
    std::vector<MultiPoly> spec;
    for (const auto& f : system) spec.push_back(f.specialize(at).with_vars(vars));
    return solve_system(spec, vars, 16).boxes.size();
}

}  // namespace

TEST(DiscriminantVariety, SquareRootFamily) {
    auto dv = discriminant_variety(polys({"X^2 + u"}, {"X", "u"}), {"X"}, {"u"});
    ASSERT_EQ(dv.polys.size(), 1u);
    EXPECT_EQ(dv.polys[0], parse_poly("u", {"u"}));
}

TEST(DiscriminantVariety, LinearFamilyIsEmpty) {
    auto dv = discriminant_variety(polys({"X - u"}, {"X", "u"}), {"X"}, {"u"});
    EXPECT_TRUE(dv.polys.empty());
}

TEST(DiscriminantVariety, LeadingCoefficientPart) {
    // u X - 1 = 0 loses its solution at u = 0 without becoming singular.
    auto dv = discriminant_variety(polys({"u*X - 1"}, {"X", "u"}), {"X"}, {"u"});
    ASSERT_EQ(dv.polys.size(), 1u);
    EXPECT_EQ(dv.polys[0], parse_poly("u", {"u"}));
}

TEST(DiscriminantVariety, RejectsPositiveDimensional) {
    EXPECT_THROW(discriminant_variety(polys({"X - Y", "u*X - u*Y"}, {"X", "Y", "u"}), {"X", "Y"}, {"u"}),
                 UnsupportedInput);
}

TEST(OpenCad, SingleLinearParameter) {
    auto cad = open_cad({parse_poly("u", {"u"})}, {"u"});
    auto pts = sample_points(cad);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(pts[0][0], Rational(-1));
    EXPECT_EQ(pts[1][0], Rational(1));
}

TEST(OpenCad, NoPolynomialsGivesOrigin) {
    auto cad = open_cad({}, {"a", "b"});
    auto pts = sample_points(cad);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_EQ(pts[0], (SamplePoint{Rational(0), Rational(0)}));
}

TEST(OpenCad, UnitCircleCells) {
    const std::vector<std::string> uv{"u", "v"};
    auto cad = open_cad({parse_poly("u^2 + v^2 - 1", uv)}, uv);
    ASSERT_EQ(cad.po[0].size(), 1u);
    EXPECT_EQ(cad.po[0][0], parse_poly("u^2 - 1", uv));
    auto pts = sample_points(cad);
    EXPECT_EQ(pts.size(), 5u);
    int inside = 0;
    for (const auto& p : pts) {
        Rational val = p[0] * p[0] + p[1] * p[1] - 1;
        EXPECT_NE(val.sign(), 0);
        inside += val.sign() < 0;
    }
    EXPECT_EQ(inside, 1);
}

// Consecutive interleaving points bracket exactly one root; none is a root.
TEST(Interleaving, SeparatesRoots) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 6), cnt(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<Rational> roots;
        const int k = cnt(rng);
        for (int i = 0; i < k; ++i) roots.insert(Rational(num(rng), den(rng)));
        std::vector<Rational> rv(roots.begin(), roots.end());
        // Add an irreducible quadratic factor half of the time (roots ±sqrt(c)).
        UniPoly p = UniPoly::from_roots(rv, "u");
        std::vector<double> irr;
        if (trial % 2 == 0) {
            const int c = 2 + trial % 5;
            if (c != 4) {
                p = p * UniPoly(std::vector<Rational>{Rational(-c), Rational(0), Rational(1)}, "u");
                irr = {-std::sqrt(double(c)), std::sqrt(double(c))};
            }
        }
        auto pts = interleaving_points(p);
        std::vector<double> all;
        for (const auto& r : rv) all.push_back(r.to_double());
        all.insert(all.end(), irr.begin(), irr.end());
        std::sort(all.begin(), all.end());
        ASSERT_EQ(pts.size(), all.empty() ? 1u : all.size() + 1);
        for (const auto& s : pts) EXPECT_NE(p.sign_at(s), 0);
        for (std::size_t i = 0; i < all.size(); ++i) {
            EXPECT_LT(pts[i].to_double(), all[i]);
            EXPECT_GT(pts[i + 1].to_double(), all[i]);
        }
    }
}

// Random parameter points off the discriminant variety agree with a sample point of
// the same sign pattern on the number of real solutions.
TEST(DiscriminantVariety, SamplesCoverCells) {
    const std::vector<std::string> all{"X", "Y", "a", "b"};
    auto system = polys({"X^2 + Y^2 - a", "X - b*Y"}, all);
    auto dv = discriminant_variety(system, {"X", "Y"}, {"a", "b"});
    ASSERT_FALSE(dv.polys.empty());
    auto cad = open_cad(dv.polys, {"a", "b"});
    std::map<std::vector<int>, std::size_t> cells;
    for (const auto& s : sample_points(cad)) {
        Assignment at{{"a", s[0]}, {"b", s[1]}};
        auto sv = sign_vector(dv.polys, at);
        for (int x : sv) ASSERT_NE(x, 0);
        auto n = real_solution_count(system, {"X", "Y"}, at);
        auto [it, fresh] = cells.emplace(sv, n);
        if (!fresh) EXPECT_EQ(it->second, n);
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-40, 40);
    for (int trial = 0; trial < 40; ++trial) {
        Assignment at{{"a", Rational(num(rng), 7)}, {"b", Rational(num(rng), 9)}};
        auto sv = sign_vector(dv.polys, at);
        if (std::count(sv.begin(), sv.end(), 0) > 0) continue;
        auto it = cells.find(sv);
        ASSERT_NE(it, cells.end());
        EXPECT_EQ(it->second, real_solution_count(system, {"X", "Y"}, at));
    }
}
