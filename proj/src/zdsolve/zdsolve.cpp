#include "certsolve/zdsolve.hpp"

#include <algorithm>
#include <map>

#include "certsolve/errors.hpp"

namespace certsolve {

namespace {

MultiPoly monomial_poly(const Exponent& e, const std::vector<std::string>& vars) {
    return MultiPoly::from_terms(vars, {{e, Rational(1)}});
}

// Coordinates of a normal form on the quotient basis.
RatVector coordinates(const MultiPoly& nf, const std::map<Exponent, std::size_t>& index, const std::vector<std::string>& vars) {
    RatVector v(index.size(), Rational(0));
    const MultiPoly q = nf.with_vars(vars);
    for (const auto& [e, c] : q.terms()) {
        auto it = index.find(e);
        if (it == index.end()) throw InternalError("normal form left the quotient basis");
        v[it->second] = c;
    }
    return v;
}

struct Quotient {
    std::vector<Exponent> basis;
    std::map<Exponent, std::size_t> index;
    std::vector<RatMatrix> mult;  // one per variable
};

Quotient quotient_structure(const GroebnerBasis& gb) {
    Quotient q;
    q.basis = quotient_basis(gb);
    for (std::size_t k = 0; k < q.basis.size(); ++k) q.index.emplace(q.basis[k], k);
    const auto& vars = gb.vars();
    const std::size_t d = q.basis.size();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        RatMatrix m(d, RatVector(d, Rational(0)));
        for (std::size_t k = 0; k < d; ++k) {
            Exponent e = q.basis[k];
            e[i] += 1;
            RatVector col;
            if (auto it = q.index.find(e); it != q.index.end()) {
                col.assign(d, Rational(0));
                col[it->second] = Rational(1);
            } else {
                col = coordinates(normal_form(monomial_poly(e, vars), gb), q.index, vars);
            }
            for (std::size_t r = 0; r < d; ++r) m[r][k] = col[r];
        }
        q.mult.push_back(std::move(m));
    }
    return q;
}

RatMatrix combine(const std::vector<RatMatrix>& mats, const LinearForm& a, std::size_t d) {
    RatMatrix out(d, RatVector(d, Rational(0)));
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                if (!mats[i][r][c].is_zero()) out[r][c] += a[i] * mats[i][r][c];
    }
    return out;
}

// Radical of a zero-dimensional ideal: add the square-free parts of the univariate
// eliminants (characteristic polynomials of the coordinate multiplications).
GroebnerBasis radical_of(const GroebnerBasis& gb, const Quotient& q) {
    std::vector<MultiPoly> gens = gb.generators();
    bool changed = false;
    for (std::size_t i = 0; i < gb.vars().size(); ++i) {
        const std::string& v = gb.vars()[i];
        UniPoly cp = charpoly(q.mult[i], v);
        UniPoly sf = squarefree_part(cp);
        if (sf.degree() < cp.degree()) changed = true;
        gens.push_back(MultiPoly::from_unipoly(sf.with_var(v)).with_vars(gb.vars()));
    }
    if (!changed) return gb;
    return buchberger(gens, gb.vars(), gb.order());
}

std::vector<LinearForm> candidate_schedule(std::size_t n, int rounds) {
    std::vector<LinearForm> out;
    for (std::size_t i = 0; i < n; ++i) {
        LinearForm a(n, Rational(0));
        a[i] = Rational(1);
        out.push_back(std::move(a));
    }
    for (int j = 1; j <= rounds; ++j) {
        LinearForm a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = pow(Rational(static_cast<long>(i + 1)), static_cast<unsigned>(j));
        out.push_back(std::move(a));
    }
    return out;
}

bool is_separating_on(const Quotient& rad, const LinearForm& a) {
    const std::size_t d = rad.basis.size();
    if (d <= 1) return true;
    const UniPoly cp = charpoly(combine(rad.mult, a, d));
    return squarefree_part(cp).degree() == static_cast<int>(d);
}

constexpr int kScheduleRounds = 64;

}  // namespace

RatMatrix multiplication_matrix(const GroebnerBasis& gb, const MultiPoly& f) {
    const auto basis = quotient_basis(gb);
    std::map<Exponent, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    const std::size_t d = basis.size();
    RatMatrix m(d, RatVector(d, Rational(0)));
    for (std::size_t k = 0; k < d; ++k) {
        const RatVector col = coordinates(normal_form(f * monomial_poly(basis[k], gb.vars()), gb), index, gb.vars());
        for (std::size_t r = 0; r < d; ++r) m[r][k] = col[r];
    }
    return m;
}

LinearForm separating_element(const GroebnerBasis& gb) {
    const Quotient q = quotient_structure(gb);
    const GroebnerBasis rad = radical_of(gb, q);
    const Quotient rq = rad.generators() == gb.generators() ? q : quotient_structure(rad);
    for (const auto& a : candidate_schedule(gb.vars().size(), kScheduleRounds))
        if (is_separating_on(rq, a)) return a;
    throw InternalError("no separating linear form found in the candidate schedule");
}

RUR compute_rur(const GroebnerBasis& gb, const LinearForm& sep) {
    const std::size_t n = gb.vars().size();
    if (sep.size() != n) throw InvalidInput("separating form has the wrong number of coefficients");
    RUR out;
    out.vars = gb.vars();
    out.separating = sep;
    if (gb.is_unit()) {
        out.ft = UniPoly::constant(1, "T");
        out.ft_bar = out.ft;
        out.coords.assign(n, UniPoly({}, "T"));
        return out;
    }
    const Quotient q = quotient_structure(gb);
    const std::size_t d = q.basis.size();
    out.ft = charpoly(combine(q.mult, sep, d), "T");
    out.ft_bar = squarefree_part(out.ft).monic().with_var("T");

    const GroebnerBasis rad = radical_of(gb, q);
    const Quotient rq = rad.generators() == gb.generators() ? q : quotient_structure(rad);
    const std::size_t dr = rq.basis.size();
    if (out.ft_bar.degree() != static_cast<int>(dr)) throw InvalidInput("linear form is not separating");

    // Krylov basis 1, t, ..., t^(D-1) of the radical quotient.
    const RatMatrix mt = combine(rq.mult, sep, dr);
    RatVector v(dr, Rational(0));
    v[rq.index.at(Exponent(n, 0))] = Rational(1);
    const RatVector one = v;
    RatMatrix krylov(dr, RatVector(dr));
    for (std::size_t k = 0; k < dr; ++k) {
        for (std::size_t r = 0; r < dr; ++r) krylov[r][k] = v[r];
        v = mat_vec(mt, v);
    }
    const UniPoly dft = out.ft_bar.derivative();
    for (std::size_t i = 0; i < n; ++i) {
        auto c = solve(krylov, mat_vec(rq.mult[i], one));
        if (!c) throw InvalidInput("linear form is not separating");
        const UniPoly g(*c, "T");
        out.coords.push_back(rem(g * dft, out.ft_bar).with_var("T"));
    }
    return out;
}

std::vector<SolutionBox> isolate_system(const RUR& rur, int output_precision) {
    std::vector<SolutionBox> boxes;
    if (rur.ft_bar.degree() < 1) return boxes;
    const Rational target = Rational(Integer(1), Integer(1) << static_cast<unsigned>(std::max(output_precision, 0)));
    const UniPoly dft = rur.ft_bar.derivative();
    for (IsolatingInterval J : isolate_real_roots(rur.ft_bar)) {
        int wp = output_precision + 64;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 400) throw InternalError("isolate_system: refinement did not converge");
            std::vector<MPInterval> coords;
            bool ok = true;
            if (J.is_point()) {
                const Rational den = dft.eval(J.lo);
                for (const auto& f : rur.coords) {
                    MPInterval c(f.eval(J.lo) / den, wp);
                    if (c.width() > target) ok = false;
                    coords.push_back(c);
                }
                if (!ok) {
                    wp *= 2;
                    continue;
                }
            } else {
                const MPInterval jiv(J.lo, J.hi, wp);
                const MPInterval den = dft.eval(jiv, wp);
                if (den.contains_zero()) {
                    J = refine_root(J, J.width() / Rational(16));
                    continue;
                }
                for (const auto& f : rur.coords) {
                    MPInterval c = f.eval(jiv, wp) / den;
                    if (c.width() > target) ok = false;
                    coords.push_back(c);
                }
                if (!ok) {
                    J = refine_root(J, J.width() / Rational(256));
                    if (J.width() < target * target) wp += 64;
                    continue;
                }
            }
            boxes.push_back(SolutionBox{std::move(coords), true});
            break;
        }
    }
    return boxes;
}

// ---------------------------------------------------------------- interval evaluation

namespace {

MPInterval iv_pow(const MPInterval& x, int k, int precision) {
    if (k == 0) return MPInterval(Rational(1), precision);
    if (k == 1) return x.with_precision(precision);
    const auto uk = static_cast<unsigned>(k);
    const Rational lo = pow(x.lower(), uk);
    const Rational hi = pow(x.upper(), uk);
    if (k % 2 == 1) return MPInterval(lo, hi, precision);
    if (x.contains_zero()) return MPInterval(Rational(0), std::max(lo, hi), precision);
    return MPInterval(std::min(lo, hi), std::max(lo, hi), precision);
}

}  // namespace

MPInterval iv_eval(const MultiPoly& p, const std::vector<std::string>& vars, const std::vector<MPInterval>& box, int precision) {
    if (box.size() != vars.size()) throw InvalidInput("iv_eval: box dimension mismatch");
    const MultiPoly q = p.with_vars(vars);
    MPInterval acc(Rational(0), precision);
    for (const auto& [e, c] : q.terms()) {
        MPInterval t(c, precision);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * iv_pow(box[i], e[i], precision);
        acc = acc + t;
    }
    return acc;
}

// ---------------------------------------------------------------- Krawczyk

namespace {

Rational round_to(const Rational& r, int prec) { return Dyadic::round(r, prec, false).to_rational(); }

Rational max_abs(const RatVector& v) {
    Rational m(0);
    for (const auto& x : v) m = std::max(m, abs(x));
    return m;
}

struct Krawczyk {
    const std::vector<MultiPoly>& f;
    const std::vector<std::vector<MultiPoly>>& jac;
    const std::vector<std::string>& vars;
    int wp;

    RatVector eval_f(const RatVector& x) const {
        Assignment a;
        for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = x[i];
        RatVector out;
        for (const auto& p : f) out.push_back(p.evaluate(a));
        return out;
    }

    RatMatrix eval_jac(const RatVector& x) const {
        Assignment a;
        for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = x[i];
        RatMatrix m;
        for (const auto& row : jac) {
            RatVector r;
            for (const auto& p : row) r.push_back(p.evaluate(a));
            m.push_back(std::move(r));
        }
        return m;
    }

    // K(X) = c - Y f(c) + (I - Y J(X)) (X - c), with Y an approximate inverse of J(c).
    std::vector<MPInterval> image(const std::vector<MPInterval>& X, const RatVector& c, const RatMatrix& Y) const {
        const std::size_t n = X.size();
        const RatVector yf = mat_vec(Y, eval_f(c));
        std::vector<std::vector<MPInterval>> JX(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) JX[i].push_back(iv_eval(jac[i][j], vars, X, wp));
        std::vector<MPInterval> out;
        for (std::size_t i = 0; i < n; ++i) {
            MPInterval k(c[i] - yf[i], wp);
            for (std::size_t j = 0; j < n; ++j) {
                MPInterval m(i == j ? Rational(1) : Rational(0), wp);
                for (std::size_t l = 0; l < n; ++l) {
                    if (Y[i][l].is_zero()) continue;
                    m = m - MPInterval(Y[i][l], wp) * JX[l][j];
                }
                k = k + m * (X[j] - MPInterval(c[j], wp));
            }
            out.push_back(k);
        }
        return out;
    }
};

bool strictly_inside(const std::vector<MPInterval>& k, const std::vector<MPInterval>& x) {
    for (std::size_t i = 0; i < k.size(); ++i)
        if (!(x[i].lower() < k[i].lower() && k[i].upper() < x[i].upper())) return false;
    return true;
}

Rational max_width(const std::vector<MPInterval>& x) {
    Rational m(0);
    for (const auto& c : x) m = std::max(m, c.width());
    return m;
}

std::optional<RatMatrix> rounded_inverse(const RatMatrix& a, int wp) {
    auto inv = inverse(a);
    if (!inv) return std::nullopt;
    for (auto& row : *inv)
        for (auto& v : row) v = round_to(v, wp);
    return inv;
}

}  // namespace

SolutionBox interval_newton(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars,
                            const std::vector<Rational>& initial_point, int precision) {
    const std::size_t n = vars.size();
    if (system.size() != n) throw InvalidInput("interval_newton needs a square system");
    if (initial_point.size() != n) throw InvalidInput("interval_newton: initial point dimension mismatch");
    std::vector<std::vector<MultiPoly>> jac(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& v : vars) jac[i].push_back(system[i].partial_derivative(v));
    const int wp = std::max(precision, 1) + 64;
    const Krawczyk kr{system, jac, vars, wp};
    const Rational target = Rational(Integer(1), Integer(1) << static_cast<unsigned>(std::max(precision, 0)));

    // Point Newton iterations with rounded iterates.
    RatVector x = initial_point;
    Rational last_step(1);
    for (int it = 0; it < 200; ++it) {
        auto step = solve(kr.eval_jac(x), [&] {
            RatVector fx = kr.eval_f(x);
            for (auto& v : fx) v = -v;
            return fx;
        }());
        if (!step) break;
        for (std::size_t i = 0; i < n; ++i) x[i] = round_to(x[i] + (*step)[i], wp);
        last_step = max_abs(*step);
        if (last_step * Rational(256) < target) break;
    }

    auto Y = rounded_inverse(kr.eval_jac(x), wp);
    auto point_box = [&](bool certified) {
        SolutionBox b;
        for (const auto& v : x) b.coords.emplace_back(v, wp);
        b.certified = certified;
        return b;
    };
    if (!Y) return point_box(false);

    Rational r = std::max(last_step * Rational(8), target / Rational(256));
    for (int attempt = 0; attempt < 12; ++attempt, r *= Rational(16)) {
        std::vector<MPInterval> X;
        for (const auto& v : x) X.emplace_back(v - r, v + r, wp);
        std::vector<MPInterval> K = kr.image(X, x, *Y);
        if (!strictly_inside(K, X)) continue;
        // Existence and uniqueness in X is proven; contract further.
        for (std::size_t i = 0; i < n; ++i) X[i] = intersect(K[i], X[i]);
        for (int it = 0; it < 200 && max_width(X) > target; ++it) {
            const Rational before = max_width(X);
            RatVector c;
            for (const auto& xi : X) c.push_back(round_to(xi.midpoint(), wp));
            if (auto y2 = rounded_inverse(kr.eval_jac(c), wp)) Y = y2;
            K = kr.image(X, c, *Y);
            for (std::size_t i = 0; i < n; ++i) X[i] = intersect(K[i], X[i]);
            if (max_width(X) * Rational(2) > before && it > 8) break;
        }
        return SolutionBox{std::move(X), true};
    }
    return point_box(false);
}

SolutionBox interval_newton(const std::vector<MultiPoly>& system, const std::vector<Rational>& initial_point, int precision) {
    std::vector<std::string> vars;
    for (const auto& p : system)
        for (const auto& v : p.support())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    return interval_newton(system, vars, initial_point, precision);
}

SolveResult solve_system(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars, int output_precision) {
    GroebnerBasis gb = buchberger(system, vars, MonomialOrder::degrevlex());
    if (!is_zero_dimensional(gb)) throw UnsupportedInput("system is not zero-dimensional");
    LinearForm sep = separating_element(gb);
    RUR rur = compute_rur(gb, sep);
    auto boxes = isolate_system(rur, output_precision);
    return SolveResult{std::move(gb), std::move(rur), std::move(boxes)};
}

}  // namespace certsolve
