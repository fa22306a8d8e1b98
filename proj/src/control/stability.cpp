#include <algorithm>

#include "certsolve/control.hpp"
#include "certsolve/errors.hpp"
#include "certsolve/groebner.hpp"
#include "certsolve/zdsolve.hpp"
#include "complex_poly.hpp"

namespace certsolve {

namespace {

using detail::ComplexPoly;

const std::string kOmega = "#omega";
const std::string kS = "#s";

// (1 + s)^n d((1 - s)/(1 + s)): roots of d outside the closed disk map to the open
// left half-plane, z = -1 to s = infinity, z = 1 to s = 0.
MultiPoly half_plane_image(const MultiPoly& d, const std::string& z) {
    const int n = d.degree(z);
    const auto dense = d.to_dense(z);
    const MultiPoly s = MultiPoly::variable(kS);
    const MultiPoly minus = MultiPoly(1L) - s, plus = MultiPoly(1L) + s;
    MultiPoly out(Rational(0));
    for (int k = 0; k <= n; ++k)
        out += dense[static_cast<std::size_t>(k)] * pow(minus, static_cast<unsigned>(k)) * pow(plus, static_cast<unsigned>(n - k));
    return out;
}

UniPoly as_unipoly(const MultiPoly& p, const std::string& var) {
    return p.is_constant() ? UniPoly::constant(p.constant_value(), var) : p.to_unipoly(var);
}

bool is_hurwitz(const UniPoly& q) {
    const int n = q.degree();
    const ComplexPoly v = detail::on_imaginary_axis(MultiPoly::from_unipoly(q.with_var(kS)), kS, kOmega);
    const UniPoly a = as_unipoly(v.re, kOmega), b = as_unipoly(v.im, kOmega);
    // A common factor of A and B means a root on the imaginary axis or a pair
    // symmetric about it; neither is compatible with all roots in Re s < 0.
    if (!gcd(a, b).is_constant()) return false;
    if (n % 2 == 1) return cauchy_index(a, b) == n;
    return cauchy_index(b, a) == -n;
}

// Polynomials in the parameters whose signs fix the verdict of the disk test on
// the univariate d (variable z).
std::vector<MultiPoly> edge_conditions(const MultiPoly& d, const std::string& z) {
    std::vector<MultiPoly> out;
    if (d.degree(z) < 1) {
        out.push_back(d);
        return out;
    }
    // lc_z(d) is deliberately absent: a root leaving through infinity does not
    // cross the circle, and the half-plane image keeps its degree there.
    out.push_back(d.substitute(z, MultiPoly(1L)));
    out.push_back(d.substitute(z, MultiPoly(-1L)));
    const MultiPoly q = half_plane_image(d, z);
    const ComplexPoly v = detail::on_imaginary_axis(q, kS, kOmega);
    for (const auto& p : {v.re, v.im})
        if (p.degree(kOmega) >= 0) out.push_back(p.leading_coeff(kOmega));
    if (v.re.degree(kOmega) >= 1 && v.im.degree(kOmega) >= 1) {
        const auto seq = subresultant_sequence(v.re, v.im, kOmega);
        for (std::size_t j = 0; j < seq.entries.size(); ++j) out.push_back(seq.entries[j].coeff(kOmega, static_cast<int>(j)));
    }
    std::vector<MultiPoly> kept;
    for (auto& p : out)
        if (!p.is_zero() && !p.is_constant()) kept.push_back(p.compacted());
    return kept;
}

std::vector<std::string> chart_names(const MultiPoly& d) {
    std::vector<std::string> names{"x1", "x2"};
    for (auto& n : names)
        while (d.var_index(n) >= 0) n += "_";
    return names;
}

}  // namespace

bool unit_disk_stability_1d(const UniPoly& d) {
    if (d.is_zero()) throw InvalidInput("unit_disk_stability_1d: zero polynomial");
    if (d.degree() == 0) return true;
    if (d.eval(Rational(-1)).is_zero()) return false;
    const MultiPoly q = half_plane_image(MultiPoly::from_unipoly(d), d.var());
    return is_hurwitz(as_unipoly(q, kS));
}

MoebiusPair moebius_split(const MultiPoly& d, const std::vector<std::string>& zvars, const std::vector<std::string>& xvars) {
    if (zvars.size() != xvars.size()) throw InvalidInput("moebius_split: variable lists differ in length");
    // (x - i)^e (x + i)^(deg - e) per variable, cached by exponent.
    std::vector<std::vector<ComplexPoly>> factors;
    for (std::size_t k = 0; k < zvars.size(); ++k) {
        const int deg = std::max(d.degree(zvars[k]), 0);
        const MultiPoly x = MultiPoly::variable(xvars[k]);
        const ComplexPoly minus{x, MultiPoly(-1L)}, plus{x, MultiPoly(1L)};
        std::vector<ComplexPoly> row;
        for (int e = 0; e <= deg; ++e) {
            ComplexPoly f{MultiPoly(1L), MultiPoly(0L)};
            for (int i = 0; i < e; ++i) f = f * minus;
            for (int i = e; i < deg; ++i) f = f * plus;
            row.push_back(f);
        }
        factors.push_back(std::move(row));
    }
    std::vector<int> zidx;
    for (const auto& z : zvars) zidx.push_back(d.var_index(z));

    ComplexPoly out;
    for (const auto& [exp, c] : d.terms()) {
        Exponent rest = exp;
        ComplexPoly t{MultiPoly(1L), MultiPoly(0L)};
        for (std::size_t k = 0; k < zvars.size(); ++k) {
            const int e = zidx[k] >= 0 ? exp[static_cast<std::size_t>(zidx[k])] : 0;
            if (zidx[k] >= 0) rest[static_cast<std::size_t>(zidx[k])] = 0;
            t = t * factors[k][static_cast<std::size_t>(e)];
        }
        const MultiPoly mono = MultiPoly::from_terms(d.vars(), {{rest, c}});
        out = out + ComplexPoly{mono, MultiPoly(0L)} * t;
    }
    std::vector<std::string> vars = xvars;
    for (const auto& v : d.vars())
        if (std::find(zvars.begin(), zvars.end(), v) == zvars.end()) vars.push_back(v);
    return {out.re.with_vars(vars).compacted(), out.im.with_vars(vars).compacted()};
}

bool stability_2d(const MultiPoly& d, const std::string& z1, const std::string& z2) {
    if (d.is_zero()) throw InvalidInput("stability_2d: zero polynomial");
    for (const auto& v : d.support())
        if (v != z1 && v != z2) throw InvalidInput("stability_2d: unexpected variable " + v);
    for (const auto& [z, other] : {std::pair{z1, z2}, std::pair{z2, z1}}) {
        const MultiPoly edge = d.substitute(other, MultiPoly(1L));
        if (edge.is_zero()) return false;
        if (!unit_disk_stability_1d(as_unipoly(edge.compacted(), z))) return false;
    }
    const auto xs = chart_names(d);
    const MoebiusPair ri = moebius_split(d, {z1, z2}, xs);
    std::vector<MultiPoly> sys{ri.re.with_vars(xs), ri.im.with_vars(xs)};
    const GroebnerBasis gb = buchberger(sys, xs);
    if (gb.is_unit()) return true;
    if (!is_zero_dimensional(gb)) throw UnsupportedInput("torus system is not zero-dimensional");
    return solve_system(sys, xs, 8).boxes.empty();
}

StabilityVerdict stability_parametric(const MultiPoly& d, const std::vector<std::string>& params, const std::string& z1,
                                      const std::string& z2) {
    if (params.empty()) throw InvalidInput("stability_parametric needs at least one parameter");
    const auto xs = chart_names(d);
    const MoebiusPair ri = moebius_split(d, {z1, z2}, xs);
    std::vector<std::string> ring = xs;
    ring.insert(ring.end(), params.begin(), params.end());
    const auto dv = discriminant_variety({ri.re.with_vars(ring), ri.im.with_vars(ring)}, xs, params);

    std::vector<MultiPoly> polys = dv.polys;
    for (const auto& [z, other] : {std::pair{z1, z2}, std::pair{z2, z1}}) {
        const auto extra = edge_conditions(d.substitute(other, MultiPoly(1L)), z);
        polys.insert(polys.end(), extra.begin(), extra.end());
    }
    const MultiPoly corner = d.substitute(z1, MultiPoly(1L)).substitute(z2, MultiPoly(1L));
    if (!corner.is_zero() && !corner.is_constant()) polys.push_back(corner);
    std::vector<MultiPoly> in_params;
    for (const auto& p : polys) in_params.push_back(p.with_vars(params));

    const CadTree cad = open_cad(in_params, params);
    StabilityVerdict out{params, cad.po.back(), {}};
    for (const auto& pt : sample_points(cad)) {
        Assignment at;
        for (std::size_t i = 0; i < params.size(); ++i) at[params[i]] = pt[i];
        out.cells.push_back({pt, stability_2d(d.specialize(at).compacted(), z1, z2)});
    }
    return out;
}

}  // namespace certsolve
