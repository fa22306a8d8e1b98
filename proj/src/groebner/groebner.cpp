#include "certsolve/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "certsolve/errors.hpp"

namespace certsolve {

namespace {

int degrevlex_range(const Exponent& a, const Exponent& b, std::size_t from, std::size_t to) {
    int da = 0;
    int db = 0;
    for (std::size_t i = from; i < to; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = to; i-- > from;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    switch (kind) {
        case Kind::Lex:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case Kind::DegRevLex:
            return degrevlex_range(a, b, 0, a.size());
        case Kind::Block: {
            const auto s = static_cast<std::size_t>(std::clamp(split, 0, static_cast<int>(a.size())));
            const int c = degrevlex_range(a, b, 0, s);
            return c != 0 ? c : degrevlex_range(a, b, s, a.size());
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case Kind::Lex: return "lex";
        case Kind::DegRevLex: return "degrevlex";
        case Kind::Block: return "block(" + std::to_string(split) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------- internal sparse form

namespace {

struct Term {
    Exponent e;
    Rational c;
};

// Terms sorted by increasing monomial; the leading term is back().
using Poly = std::vector<Term>;

Poly to_poly(const MultiPoly& p, const std::vector<std::string>& vars, const MonomialOrder& ord) {
    const MultiPoly q = p.with_vars(vars);
    Poly out;
    out.reserve(q.term_count());
    for (const auto& [e, c] : q.terms()) out.push_back({e, c});
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord.compare(a.e, b.e) < 0; });
    return out;
}

MultiPoly from_poly(const Poly& p, const std::vector<std::string>& vars) {
    std::map<Exponent, Rational> terms;
    for (const auto& t : p) terms.emplace(t.e, t.c);
    return MultiPoly::from_terms(vars, terms);
}

bool divides_exp(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent lcm_exp(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime_exp(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

int degree_of(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool is_constant_exp(const Exponent& a) {
    return std::all_of(a.begin(), a.end(), [](int k) { return k == 0; });
}

Exponent sub_exp(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// p - c * x^m * g
Poly sub_mul(const Poly& p, const Rational& c, const Exponent& m, const Poly& g, const MonomialOrder& ord) {
    Poly out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Exponent shifted;
    auto shifted_at = [&](std::size_t k) {
        Exponent r(m.size());
        for (std::size_t v = 0; v < m.size(); ++v) r[v] = g[k].e[v] + m[v];
        return r;
    };
    if (j < g.size()) shifted = shifted_at(j);
    while (i < p.size() || j < g.size()) {
        int cmp;
        if (i == p.size()) cmp = 1;
        else if (j == g.size()) cmp = -1;
        else cmp = ord.compare(p[i].e, shifted) < 0 ? -1 : (ord.compare(p[i].e, shifted) > 0 ? 1 : 0);
        if (cmp < 0) {
            out.push_back(p[i++]);
        } else if (cmp > 0) {
            out.push_back({shifted, -(c * g[j].c)});
            if (++j < g.size()) shifted = shifted_at(j);
        } else {
            Rational v = p[i].c - c * g[j].c;
            if (!v.is_zero()) out.push_back({p[i].e, std::move(v)});
            ++i;
            if (++j < g.size()) shifted = shifted_at(j);
        }
    }
    return out;
}

void make_monic(Poly& p) {
    if (p.empty()) return;
    const Rational inv = Rational(1) / p.back().c;
    for (auto& t : p) t.c *= inv;
}

// Full reduction of p by monic reducers.
Poly reduce(Poly p, const std::vector<const Poly*>& reducers, const MonomialOrder& ord) {
    Poly rem_desc;
    while (!p.empty()) {
        const Term& lead = p.back();
        const Poly* hit = nullptr;
        for (const Poly* g : reducers)
            if (divides_exp(g->back().e, lead.e)) {
                hit = g;
                break;
            }
        if (hit == nullptr) {
            rem_desc.push_back(lead);
            p.pop_back();
            continue;
        }
        const Exponent m = sub_exp(lead.e, hit->back().e);
        const Rational c = lead.c;
        p = sub_mul(p, c, m, *hit, ord);
    }
    std::reverse(rem_desc.begin(), rem_desc.end());
    return rem_desc;
}

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    const Exponent l = lcm_exp(f.back().e, g.back().e);
    Poly a = sub_mul(Poly{}, -(Rational(1) / f.back().c), sub_exp(l, f.back().e), f, ord);
    return sub_mul(a, Rational(1) / g.back().c, sub_exp(l, g.back().e), g, ord);
}

struct Pair {
    int i;
    int j;
    Exponent lcm;
    int deg;
};

class Engine {
public:
    Engine(const MonomialOrder& ord) : ord_(ord) {}

    // Returns false when the ideal is the unit ideal.
    bool add(Poly f) {
        f = reduce(std::move(f), active_ptrs(), ord_);
        if (f.empty()) return true;
        make_monic(f);
        if (is_constant_exp(f.back().e)) return false;
        polys_.push_back(std::move(f));
        update(static_cast<int>(polys_.size()) - 1);
        return true;
    }

    bool run() {
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                if (a.deg != b.deg) return a.deg < b.deg;
                const int c = ord_.compare(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                return std::tie(a.j, a.i) < std::tie(b.j, b.i);
            });
            const Pair pr = *best;
            pairs_.erase(best);
            Poly s = s_poly(polys_[static_cast<std::size_t>(pr.i)], polys_[static_cast<std::size_t>(pr.j)], ord_);
            if (!add(std::move(s))) return false;
        }
        return true;
    }

    std::vector<Poly> reduced_basis() const {
        std::vector<Poly> out;
        for (int idx : active_) {
            std::vector<const Poly*> others;
            for (int k : active_)
                if (k != idx) others.push_back(&polys_[static_cast<std::size_t>(k)]);
            const Poly& g = polys_[static_cast<std::size_t>(idx)];
            // Keep the leading term, reduce the tail.
            Poly tail(g.begin(), g.end() - 1);
            Poly r = reduce(std::move(tail), others, ord_);
            r.push_back(g.back());
            make_monic(r);
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return ord_.compare(a.back().e, b.back().e) < 0; });
        return out;
    }

private:
    std::vector<const Poly*> active_ptrs() const {
        std::vector<const Poly*> out;
        for (int k : active_) out.push_back(&polys_[static_cast<std::size_t>(k)]);
        return out;
    }

    const Exponent& lm(int k) const { return polys_[static_cast<std::size_t>(k)].back().e; }

    // Gebauer-Moeller installation of the new element h (product and chain criteria).
    void update(int h) {
        const Exponent& lh = lm(h);
        std::vector<Pair> c;
        for (int g : active_) {
            Exponent l = lcm_exp(lh, lm(g));
            const int d = degree_of(l);
            c.push_back({g, h, std::move(l), d});
        }
        std::vector<Pair> d;
        for (std::size_t a = 0; a < c.size(); ++a) {
            const bool coprime = coprime_exp(lh, lm(c[a].i));
            bool keep = coprime;
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < c.size() && keep; ++b)
                    if (divides_exp(c[b].lcm, c[a].lcm)) keep = false;
                for (const auto& prev : d)
                    if (keep && divides_exp(prev.lcm, c[a].lcm)) keep = false;
            }
            if (keep) d.push_back(c[a]);
        }
        std::vector<Pair> kept;
        for (auto& pr : pairs_) {
            const bool drop = divides_exp(lh, pr.lcm) && lcm_exp(lm(pr.i), lh) != pr.lcm && lcm_exp(lh, lm(pr.j)) != pr.lcm;
            if (!drop) kept.push_back(std::move(pr));
        }
        for (auto& pr : d)
            if (!coprime_exp(lh, lm(pr.i))) kept.push_back(std::move(pr));
        pairs_ = std::move(kept);
        std::vector<int> act;
        for (int g : active_)
            if (!divides_exp(lh, lm(g))) act.push_back(g);
        act.push_back(h);
        active_ = std::move(act);
    }

    MonomialOrder ord_;
    std::vector<Poly> polys_;
    std::vector<int> active_;
    std::vector<Pair> pairs_;
};

std::vector<std::string> system_vars(const std::vector<MultiPoly>& system) {
    std::vector<std::string> vars;
    for (const auto& p : system)
        for (const auto& v : p.vars())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    return vars;
}

}  // namespace

// ---------------------------------------------------------------- public API

GroebnerBasis::GroebnerBasis(std::vector<std::string> vars, MonomialOrder order, std::vector<MultiPoly> generators)
    : vars_(std::move(vars)), order_(order), gens_(std::move(generators)) {
    for (auto& g : gens_) {
        g = g.with_vars(vars_);
        lms_.push_back(leading_monomial(g, vars_, order_));
    }
}

bool GroebnerBasis::is_unit() const { return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero(); }

Exponent leading_monomial(const MultiPoly& p, const std::vector<std::string>& vars, const MonomialOrder& order) {
    if (p.is_zero()) throw InvalidInput("leading monomial of the zero polynomial");
    const MultiPoly q = p.with_vars(vars);
    const Exponent* best = nullptr;
    for (const auto& [e, c] : q.terms())
        if (best == nullptr || order.compare(e, *best) > 0) best = &e;
    return *best;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars, const MonomialOrder& order) {
    Engine eng(order);
    bool ok = true;
    // Deterministic insertion: smallest leading monomial first.
    std::vector<Poly> inputs;
    for (const auto& p : system)
        if (!p.is_zero()) inputs.push_back(to_poly(p, vars, order));
    std::stable_sort(inputs.begin(), inputs.end(), [&](const Poly& a, const Poly& b) { return order.compare(a.back().e, b.back().e) < 0; });
    for (auto& p : inputs) {
        ok = eng.add(std::move(p));
        if (!ok) break;
    }
    if (ok) ok = eng.run();
    if (!ok) return GroebnerBasis(vars, order, {MultiPoly(Rational(1), vars)});
    std::vector<MultiPoly> gens;
    for (const auto& g : eng.reduced_basis()) gens.push_back(from_poly(g, vars));
    return GroebnerBasis(vars, order, std::move(gens));
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& system, const MonomialOrder& order) {
    return buchberger(system, system_vars(system), order);
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
    std::vector<Poly> red;
    for (const auto& g : gb.generators()) red.push_back(to_poly(g, gb.vars(), gb.order()));
    std::vector<const Poly*> ptrs;
    for (auto& r : red) {
        make_monic(r);
        ptrs.push_back(&r);
    }
    std::vector<std::string> vars = gb.vars();
    for (const auto& v : p.support())
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw InvalidInput("normal_form: variable " + v + " not in the basis ring");
    return from_poly(reduce(to_poly(p, vars, gb.order()), ptrs, gb.order()), vars);
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const std::vector<std::string>& vars, const MonomialOrder& order) {
    return from_poly(s_poly(to_poly(f, vars, order), to_poly(g, vars, order), order), vars);
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
    if (gb.is_unit()) return true;
    const std::size_t n = gb.vars().size();
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& lm : gb.leading_monomials()) {
            bool pure = lm[i] > 0;
            for (std::size_t k = 0; k < n && pure; ++k)
                if (k != i && lm[k] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Exponent> quotient_basis(const GroebnerBasis& gb) {
    if (!is_zero_dimensional(gb)) throw UnsupportedInput("ideal is not zero-dimensional");
    if (gb.is_unit()) return {};
    const std::size_t n = gb.vars().size();
    std::vector<int> bound(n, 0);
    for (const auto& lm : gb.leading_monomials())
        for (std::size_t i = 0; i < n; ++i) {
            bool pure = lm[i] > 0;
            for (std::size_t k = 0; k < n && pure; ++k)
                if (k != i && lm[k] != 0) pure = false;
            if (pure && (bound[i] == 0 || lm[i] < bound[i])) bound[i] = lm[i];
        }
    std::vector<Exponent> out;
    Exponent e(n, 0);
    for (;;) {
        bool under = true;
        for (const auto& lm : gb.leading_monomials())
            if (divides_exp(lm, e)) {
                under = false;
                break;
            }
        if (under) out.push_back(e);
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    const MonomialOrder ord = gb.order();
    std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) { return ord.compare(a, b) < 0; });
    return out;
}

std::vector<MultiPoly> elimination_ideal(const std::vector<MultiPoly>& system, const std::vector<std::string>& keep) {
    std::vector<std::string> elim;
    for (const auto& v : system_vars(system))
        if (std::find(keep.begin(), keep.end(), v) == keep.end()) elim.push_back(v);
    std::vector<std::string> vars = elim;
    vars.insert(vars.end(), keep.begin(), keep.end());
    const MonomialOrder ord = elim.empty() ? MonomialOrder::degrevlex() : MonomialOrder::block(static_cast<int>(elim.size()));
    const GroebnerBasis gb = buchberger(system, vars, ord);
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k < gb.generators().size(); ++k) {
        const Exponent& lm = gb.leading_monomials()[k];
        bool free = true;
        for (std::size_t i = 0; i < elim.size(); ++i)
            if (lm[i] != 0) free = false;
        if (free) out.push_back(gb.generators()[k].with_vars(keep).primitive());
    }
    return out;
}

}  // namespace certsolve
