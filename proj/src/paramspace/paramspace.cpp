#include "certsolve/paramspace.hpp"

#include <algorithm>
#include <random>

#include "certsolve/errors.hpp"
#include "certsolve/groebner.hpp"

namespace certsolve {

namespace {

MultiPoly jacobian_determinant(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars) {
    const std::size_t n = vars.size();
    std::vector<std::vector<MultiPoly>> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& v : vars) m[i].push_back(system[i].partial_derivative(v));
    // Fraction-free elimination (Bareiss) over the polynomial ring.
    MultiPoly prev(Rational(1), {});
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return MultiPoly(Rational(0), {});
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiPoly(Rational(0), {});
        }
        prev = m[k][k];
    }
    MultiPoly d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

void require_generic_zero_dim(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars,
                              const std::vector<std::string>& params) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> num(-97, 97);
    std::uniform_int_distribution<int> den(1, 13);
    Assignment at;
    for (const auto& p : params) at[p] = Rational(num(rng), den(rng));
    std::vector<MultiPoly> spec;
    for (const auto& f : system) spec.push_back(f.specialize(at));
    const GroebnerBasis gb = buchberger(spec, vars);
    if (!is_zero_dimensional(gb)) throw UnsupportedInput("system is not zero-dimensional for generic parameters");
}

void collect_nonconstant(std::vector<MultiPoly>& out, const std::vector<MultiPoly>& polys) {
    for (const auto& p : polys)
        if (!p.is_constant()) out.push_back(p);
}

MultiPoly product(const std::vector<MultiPoly>& polys, const std::vector<std::string>& vars) {
    MultiPoly out(Rational(1), vars);
    for (const auto& p : polys) out = out * p;
    return out;
}

}  // namespace

DiscriminantVariety discriminant_variety(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars,
                                         const std::vector<std::string>& params) {
    if (system.size() != vars.size()) throw UnsupportedInput("discriminant variety needs as many equations as variables");
    require_generic_zero_dim(system, vars, params);
    std::vector<std::string> ring = vars;
    ring.insert(ring.end(), params.begin(), params.end());
    std::vector<MultiPoly> sys;
    for (const auto& f : system) sys.push_back(f.with_vars(ring));

    std::vector<MultiPoly> parts;
    // Critical locus.
    std::vector<MultiPoly> crit = sys;
    crit.push_back(jacobian_determinant(sys, vars).with_vars(ring));
    const auto crit_elim = elimination_ideal(crit, params);
    if (crit_elim.empty()) throw UnsupportedInput("solutions are singular for generic parameters");
    collect_nonconstant(parts, crit_elim);

    // Solutions escaping to infinity: leading coefficients of the eliminants.
    for (const auto& x : vars) {
        std::vector<std::string> keep{x};
        keep.insert(keep.end(), params.begin(), params.end());
        const auto elim = elimination_ideal(sys, keep);
        const MultiPoly* best = nullptr;
        for (const auto& g : elim) {
            const int d = g.degree(x);
            if (d < 1) continue;
            if (best == nullptr || d < best->degree(x) ||
                (d == best->degree(x) && g.total_degree() < best->total_degree()))
                best = &g;
        }
        if (best == nullptr) {
            if (elim.size() == 1 && elim[0].is_constant()) continue;  // no solutions at all
            throw UnsupportedInput("no eliminant found for variable " + x);
        }
        const MultiPoly lc = best->leading_coeff(x);
        if (!lc.is_constant()) parts.push_back(lc);
    }

    DiscriminantVariety dv{params, {}};
    for (auto& p : coprime_base(parts)) dv.polys.push_back(p.with_vars(params));
    return dv;
}

std::vector<Rational> interleaving_points(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("interleaving_points: zero polynomial");
    auto roots = isolate_real_roots(p);
    if (roots.empty()) return {Rational(0)};
    std::vector<Rational> out;
    out.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) out.push_back(separating_point(roots[i], roots[i + 1]));
    out.push_back(roots.back().hi + 1);
    return out;
}

CadTree open_cad(const std::vector<MultiPoly>& polys, const std::vector<std::string>& params) {
    if (params.empty()) throw InvalidInput("open_cad needs at least one parameter");
    const std::size_t l = params.size();
    CadTree cad{params, std::vector<std::vector<MultiPoly>>(l), std::vector<std::vector<SamplePoint>>(l)};
    std::vector<MultiPoly> top;
    for (const auto& p : polys) {
        if (p.is_zero()) throw InvalidInput("open_cad: zero polynomial");
        top.push_back(p.with_vars(params));
    }
    auto normalize = [&](const std::vector<MultiPoly>& in) {
        std::vector<MultiPoly> out;
        for (auto& p : coprime_base(in))
            if (!p.is_constant()) out.push_back(p.with_vars(params));
        return out;
    };
    cad.po[l - 1] = normalize(top);
    // Projection: Po_{k-1} from Po_k by eliminating params[k-1].
    for (std::size_t k = l - 1; k >= 1; --k) {
        const std::string& u = params[k];
        std::vector<MultiPoly> next;
        const auto& cur = cad.po[k];
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const MultiPoly& p = cur[i];
            if (p.degree(u) < 1) {
                next.push_back(p);
                continue;
            }
            next.push_back(p.leading_coeff(u));
            if (p.degree(u) >= 2) next.push_back(resultant(p, p.partial_derivative(u), u));
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (cur[j].degree(u) >= 1) next.push_back(resultant(p, cur[j], u));
        }
        std::vector<MultiPoly> nz;
        for (auto& p : next)
            if (!p.is_zero()) nz.push_back(p);
        cad.po[k - 1] = normalize(nz);
    }
    // Lifting.
    for (std::size_t k = 0; k < l; ++k) {
        std::vector<SamplePoint> base = k == 0 ? std::vector<SamplePoint>{SamplePoint{}} : cad.pt[k - 1];
        const MultiPoly prod = product(cad.po[k], params);
        for (const auto& b : base) {
            Assignment at;
            for (std::size_t i = 0; i < b.size(); ++i) at[params[i]] = b[i];
            MultiPoly spec = prod.specialize(at);
            UniPoly uni = spec.is_constant() ? UniPoly::constant(spec.constant_value(), params[k]) : spec.to_unipoly(params[k]);
            if (uni.is_zero()) throw InternalError("open_cad: sample point lies on a projection polynomial");
            for (const auto& s : interleaving_points(uni)) {
                SamplePoint pnt = b;
                pnt.push_back(s);
                cad.pt[k].push_back(std::move(pnt));
            }
        }
    }
    return cad;
}

std::vector<SamplePoint> sample_points(const CadTree& cad) {
    if (cad.pt.empty()) return {};
    return cad.pt.back();
}

}  // namespace certsolve
