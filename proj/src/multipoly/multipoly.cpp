#include "certsolve/multipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "certsolve/errors.hpp"
#include "certsolve/subresultant.hpp"

namespace certsolve {

namespace {

std::vector<std::string> merged_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace

MultiPoly::MultiPoly(long c) {
    if (c != 0) terms_.emplace(Exponent{}, Rational(c));
}

MultiPoly::MultiPoly(const Rational& c, std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (!c.is_zero()) terms_.emplace(Exponent(vars_.size(), 0), c);
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> vars) {
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
    MultiPoly p(std::move(vars));
    Exponent e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(p.var_index(name))] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, const std::map<Exponent, Rational>& terms) {
    MultiPoly p(std::move(vars));
    for (const auto& [e, c] : terms) {
        if (e.size() != p.vars_.size()) throw InvalidInput("exponent vector length does not match variable list");
        p.add_term(e, c);
    }
    return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& u) {
    MultiPoly p({u.var()});
    for (int k = 0; k <= u.degree(); ++k) p.add_term(Exponent{k}, u.coeff(k));
    return p;
}

MultiPoly MultiPoly::from_dense(const std::vector<MultiPoly>& coeffs, const std::string& var) {
    MultiPoly out = MultiPoly::variable(var);
    out = MultiPoly(out.vars_);
    const MultiPoly x = MultiPoly::variable(var);
    MultiPoly xp(Rational(1), {var});
    for (const auto& c : coeffs) {
        out += c * xp;
        xp = xp * x;
    }
    return out;
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw InvalidInput("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool MultiPoly::depends_on(const std::string& var) const { return degree(var) > 0; }

std::vector<std::string> MultiPoly::support() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) {
                out.push_back(vars_[i]);
                break;
            }
    return out;
}

int MultiPoly::degree(const std::string& var) const {
    if (terms_.empty()) return -1;
    const int i = var_index(var);
    if (i < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::coeff(const std::string& var, int k) const {
    const int i = var_index(var);
    MultiPoly out(vars_);
    if (i < 0) return k == 0 ? *this : out;
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(i)] != k) continue;
        Exponent f = e;
        f[static_cast<std::size_t>(i)] = 0;
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::to_dense(const std::string& var) const {
    const int d = degree(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d + 1, 0)), MultiPoly(vars_));
    if (d < 0) return out;
    const int i = var_index(var);
    if (i < 0) {
        out[0] = *this;
        return out;
    }
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        const int k = f[static_cast<std::size_t>(i)];
        f[static_cast<std::size_t>(i)] = 0;
        out[static_cast<std::size_t>(k)].terms_.emplace(std::move(f), c);
    }
    return out;
}

UniPoly MultiPoly::to_unipoly(const std::string& var) const {
    for (const auto& v : support())
        if (v != var) throw InvalidInput("polynomial is not univariate in " + var + ": " + to_string());
    std::vector<Rational> c(static_cast<std::size_t>(std::max(degree(var) + 1, 0)), Rational(0));
    const int i = var_index(var);
    for (const auto& [e, v] : terms_) c[i < 0 ? 0 : static_cast<std::size_t>(e[static_cast<std::size_t>(i)])] = v;
    return UniPoly(std::move(c), var);
}

Rational MultiPoly::lex_leading_coeff() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> map_to(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it != vars.end()) map_to[i] = static_cast<int>(it - vars.begin());
    }
    MultiPoly out(vars);
    for (const auto& [e, c] : terms_) {
        Exponent f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (map_to[i] < 0) throw InvalidInput("variable " + vars_[i] + " missing from target variable list");
            f[static_cast<std::size_t>(map_to[i])] = e[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::compacted() const { return with_vars(support()); }

MultiPoly MultiPoly::specialize(const Assignment& values) const {
    std::vector<std::string> keep;
    std::vector<int> keep_idx;
    std::vector<std::pair<std::size_t, const Rational*>> subst;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it == values.end()) {
            keep.push_back(vars_[i]);
            keep_idx.push_back(static_cast<int>(i));
        } else {
            subst.emplace_back(i, &it->second);
        }
    }
    if (subst.empty()) return *this;
    MultiPoly out(keep);
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (const auto& [i, val] : subst)
            if (e[i] > 0) v *= pow(*val, static_cast<unsigned>(e[i]));
        Exponent f(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) f[k] = e[static_cast<std::size_t>(keep_idx[k])];
        out.add_term(f, v);
    }
    return out;
}

Rational MultiPoly::evaluate(const Assignment& values) const {
    MultiPoly s = specialize(values);
    if (!s.is_constant()) throw InvalidInput("evaluate: unassigned variables in " + s.to_string());
    return s.constant_value();
}

MultiPoly MultiPoly::partial_derivative(const std::string& var) const {
    const int i = var_index(var);
    MultiPoly out(vars_);
    if (i < 0) return out;
    const auto ui = static_cast<std::size_t>(i);
    for (const auto& [e, c] : terms_) {
        if (e[ui] == 0) continue;
        Exponent f = e;
        f[ui] -= 1;
        out.terms_.emplace(std::move(f), c * Rational(e[ui]));
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& replacement) const {
    auto dense = to_dense(var);
    MultiPoly out(vars_);
    MultiPoly pw(Rational(1), vars_);
    for (const auto& c : dense) {
        out += c * pw;
        pw = pw * replacement;
    }
    return out;
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return *this;
    Integer l = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    Integer g = 0;
    for (const auto& [e, c] : terms_) {
        Integer v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale(l, g);
    if (lex_leading_coeff().sign() < 0) scale = -scale;
    return scale * *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

void unify(MultiPoly& a, MultiPoly& b) {
    if (a.vars() == b.vars()) return;
    auto vars = merged_vars(a.vars(), b.vars());
    a = a.with_vars(vars);
    b = b.with_vars(vars);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.vars_ != vars_) {
        MultiPoly b = o;
        unify(*this, b);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
        MultiPoly x = a;
        MultiPoly y = b;
        unify(x, y);
        return x * y;
    }
    MultiPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(add_exp(ea, eb), ca * cb);
    return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
    MultiPoly out(a.vars_);
    if (s.is_zero()) return out;
    out.terms_ = a.terms_;
    for (auto& [e, c] : out.terms_) c *= s;
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    return (a - b).is_zero();
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e[i]));
        }
        if (factors.empty() || mag != Rational(1)) factors.insert(factors.begin(), mag.to_string());
        for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exp) {
    MultiPoly out(Rational(1), base.vars());
    MultiPoly b = base;
    while (exp) {
        if (exp & 1U) out = out * b;
        exp >>= 1U;
        if (exp) b = b * b;
    }
    return out;
}

// ---------------------------------------------------------------- division

bool divides(const MultiPoly& b0, const MultiPoly& a0, MultiPoly* q) {
    if (b0.is_zero()) throw InvalidInput("division by the zero polynomial");
    MultiPoly a = a0;
    MultiPoly b = b0;
    unify(a, b);
    const auto& [lb_e, lb_c] = *b.terms().rbegin();
    MultiPoly quo(a.vars());
    MultiPoly r = a;
    while (!r.is_zero()) {
        const auto& [lr_e, lr_c] = *r.terms().rbegin();
        Exponent d(lr_e.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = lr_e[i] - lb_e[i];
            if (d[i] < 0) return false;
        }
        MultiPoly t = MultiPoly::from_terms(a.vars(), {{d, lr_c / lb_c}});
        quo += t;
        r -= t * b;
    }
    if (q) *q = std::move(quo);
    return true;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!divides(b, a, &q)) throw InternalError("exact_div: " + b.to_string() + " does not divide " + a.to_string());
    return q;
}

// ---------------------------------------------------------------- gcd

namespace {

using DenseM = subres::Dense<MultiPoly>;

DenseM dense_in(const MultiPoly& p, const std::string& var) {
    DenseM d = p.to_dense(var);
    subres::trim(d);
    return d;
}

MultiPoly content_in(const DenseM& d) {
    MultiPoly g;
    for (const auto& c : d) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

DenseM divide_all(const DenseM& d, const MultiPoly& c) {
    DenseM out;
    out.reserve(d.size());
    for (const auto& x : d) out.push_back(exact_div(x, c));
    return out;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a0, const MultiPoly& b0) {
    MultiPoly a = a0;
    MultiPoly b = b0;
    unify(a, b);
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    std::string x;
    for (const auto& v : a.vars())
        if (a.depends_on(v) || b.depends_on(v)) {
            x = v;
            break;
        }
    if (x.empty()) return MultiPoly(Rational(1), a.vars());
    DenseM da = dense_in(a, x);
    DenseM db = dense_in(b, x);
    if (da.size() == 1) return gcd(a, content_in(db)).with_vars(a.vars());
    if (db.size() == 1) return gcd(content_in(da), b).with_vars(a.vars());

    const MultiPoly ca = content_in(da);
    const MultiPoly cb = content_in(db);
    const MultiPoly c = gcd(ca, cb);
    da = divide_all(da, ca);
    db = divide_all(db, cb);
    if (subres::degree(da) < subres::degree(db)) std::swap(da, db);
    while (subres::degree(db) > 0) {
        DenseM r = subres::prem(da, db);
        if (r.empty()) break;
        if (subres::degree(r) == 0) {
            db = DenseM{MultiPoly(Rational(1), a.vars())};
            break;
        }
        da = std::move(db);
        // Polynomial content first, then the integer content that the recursion
        // does not see once the coefficients are constants.
        db = dense_in(MultiPoly::from_dense(divide_all(r, content_in(r)), x).primitive(), x);
    }
    MultiPoly g = subres::degree(db) == 0 ? MultiPoly(Rational(1), a.vars()) : MultiPoly::from_dense(db, x);
    return (c * g).with_vars(a.vars()).primitive();
}

MultiPoly squarefree_part(const MultiPoly& p) {
    if (p.is_zero()) throw InvalidInput("square-free part of the zero polynomial");
    if (p.is_constant()) return MultiPoly(Rational(1), p.vars());
    MultiPoly g = p;
    for (const auto& v : p.support()) {
        g = gcd(g, p.partial_derivative(v));
        if (g.is_constant()) break;
    }
    return exact_div(p, g).primitive();
}

std::vector<MultiPoly> coprime_base(const std::vector<MultiPoly>& polys) {
    std::vector<MultiPoly> base;
    std::vector<MultiPoly> work;
    for (const auto& p : polys) {
        if (p.is_zero()) throw InvalidInput("coprime_base: zero polynomial");
        if (!p.is_constant()) work.push_back(squarefree_part(p));
    }
    while (!work.empty()) {
        MultiPoly f = std::move(work.back());
        work.pop_back();
        if (f.is_constant()) continue;
        bool split = false;
        for (std::size_t i = 0; i < base.size(); ++i) {
            MultiPoly d = gcd(f, base[i]);
            if (d.is_constant()) continue;
            MultiPoly g = base[i];
            base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
            work.push_back(d);
            work.push_back(exact_div(g, d).primitive());
            work.push_back(exact_div(f, d).primitive());
            split = true;
            break;
        }
        if (!split) base.push_back(f.primitive());
    }
    std::vector<MultiPoly> out;
    for (auto& b : base) {
        MultiPoly c = b.compacted();
        if (std::none_of(out.begin(), out.end(), [&](const MultiPoly& o) { return o == c; })) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
        auto ta = a.total_degree(), tb = b.total_degree();
        return ta != tb ? ta < tb : a.to_string() < b.to_string();
    });
    return out;
}

// ---------------------------------------------------------------- subresultants

namespace {

void require_var(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    if (a.var_index(var) < 0 && b.var_index(var) < 0) throw InvalidInput("variable " + var + " occurs in neither polynomial");
}

MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.vars()); }
MultiPoly one_like(const MultiPoly& p) { return MultiPoly(Rational(1), p.vars()); }

// Sres_j for deg P = p > deg Q = q (Q may be zero), j = 0..p.
std::vector<MultiPoly> sres_ordered(const DenseM& P, const DenseM& Q, const std::string& var, const MultiPoly& like) {
    const int p = subres::degree(P);
    std::vector<MultiPoly> out(static_cast<std::size_t>(p) + 1, zero_like(like));
    out[static_cast<std::size_t>(p)] = MultiPoly::from_dense(P, var).with_vars(like.vars());
    if (Q.empty()) return out;
    auto s = subres::signed_subresultants(P, Q, zero_like(like), one_like(like));
    for (int j = 0; j < p; ++j) {
        const auto& e = s.polys[static_cast<std::size_t>(j)];
        if (e.empty()) continue;
        MultiPoly v = MultiPoly::from_dense(e, var).with_vars(like.vars());
        out[static_cast<std::size_t>(j)] = subres::epsilon(p - j) == 1 ? v : -v;
    }
    return out;
}

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

SubresSequence subresultant_sequence(const MultiPoly& p1, const MultiPoly& p2, const std::string& var) {
    require_var(p1, p2, var);
    MultiPoly a = p1;
    MultiPoly b = p2;
    unify(a, b);
    if (a.var_index(var) < 0) {
        auto vars = a.vars();
        vars.push_back(var);
        a = a.with_vars(vars);
        b = b.with_vars(vars);
    }
    DenseM P = dense_in(a, var);
    DenseM Q = dense_in(b, var);
    const int p = subres::degree(P);
    const int q = subres::degree(Q);
    SubresSequence out{var, {}};
    if (p < 0 || q < 0) {
        out.entries = {zero_like(a)};
        return out;
    }
    if (p == 0 && q == 0) {
        out.entries = {one_like(a)};
        return out;
    }
    if (p > q) {
        out.entries = sres_ordered(P, Q, var, a);
        return out;
    }
    if (q > p) {
        auto rev = sres_ordered(Q, P, var, a);
        for (int j = 0; j < q; ++j)
            if (parity_sign(static_cast<long>(p - j) * (q - j)) < 0) rev[static_cast<std::size_t>(j)] = -rev[static_cast<std::size_t>(j)];
        out.entries = std::move(rev);
        return out;
    }
    // Equal degrees: reduce to R = lc(P) Q - lc(Q) P, of lower degree.
    const MultiPoly lp = P.back();
    const MultiPoly lq = Q.back();
    const MultiPoly R = lp * b - lq * a;
    out.entries.assign(static_cast<std::size_t>(p) + 1, zero_like(a));
    out.entries[static_cast<std::size_t>(p)] = a;
    out.entries[static_cast<std::size_t>(p - 1)] = R;
    DenseM Rd = dense_in(R, var);
    if (Rd.empty() || p == 1) return out;
    const int r = subres::degree(Rd);
    auto s = subres::signed_subresultants(P, Rd, zero_like(a), one_like(a));
    for (int j = 0; j <= r; ++j) {
        const auto& e = s.polys[static_cast<std::size_t>(j)];
        if (e.empty()) continue;
        MultiPoly v = MultiPoly::from_dense(e, var).with_vars(a.vars());
        if (subres::epsilon(p - j) < 0) v = -v;
        // Eliminating the leading columns leaves a factor lc(P)^(r-j).
        const int shift = r - j;
        for (int k = 0; k < shift; ++k) v = exact_div(v, lp);
        out.entries[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

MultiPoly resultant(const MultiPoly& p1, const MultiPoly& p2, const std::string& var) {
    require_var(p1, p2, var);
    MultiPoly a = p1;
    MultiPoly b = p2;
    unify(a, b);
    const int p = a.degree(var);
    const int q = b.degree(var);
    if (p < 0 || q < 0) return zero_like(a);
    if (p == 0) return pow(a, static_cast<unsigned>(q));
    if (q == 0) return pow(b, static_cast<unsigned>(p));
    return subresultant_sequence(a, b, var).entries[0];
}

MultiPoly discriminant(const MultiPoly& p, const std::string& var) {
    if (p.var_index(var) < 0) throw InvalidInput("variable " + var + " does not occur");
    const int d = p.degree(var);
    if (d < 1) throw InvalidInput("discriminant needs positive degree in " + var);
    MultiPoly r = resultant(p, p.partial_derivative(var), var);
    r = exact_div(r, p.leading_coeff(var));
    return subres::epsilon(d) == 1 ? r : -r;
}

SturmHabichtSequence sturm_habicht_sequence(const MultiPoly& p1, const MultiPoly& p2, const std::string& var) {
    require_var(p1, p2, var);
    MultiPoly a = p1;
    MultiPoly b = p2;
    unify(a, b);
    DenseM P = dense_in(a, var);
    const int p = subres::degree(P);
    if (p < 1) throw InvalidInput("Sturm-Habicht sequence needs positive degree in " + var);
    DenseM PQ = subres::multiply(subres::derivative(P), dense_in(b, var), zero_like(a));
    DenseM rem = PQ;
    if (!PQ.empty() && subres::degree(PQ) >= p) {
        rem = subres::prem(PQ, P);
        // prem multiplies by lc(P)^(deg PQ - p + 1); keep the exponent even so the sign is unchanged.
        if ((subres::degree(PQ) - p + 1) % 2 == 1) rem = subres::scale(rem, P.back());
    }
    auto s = subres::signed_subresultants(P, rem, zero_like(a), one_like(a));
    SturmHabichtSequence out{var, a, b, {}, {}};
    for (int j = 0; j <= p; ++j) {
        out.entries.push_back(MultiPoly::from_dense(s.polys[static_cast<std::size_t>(j)], var).with_vars(a.vars()));
        out.principal.push_back(s.principal[static_cast<std::size_t>(j)]);
    }
    return out;
}

int tarski_query(const SturmHabichtSequence& seq, const Assignment& specialization) {
    const MultiPoly p1 = seq.p1.specialize(specialization);
    for (const auto& v : p1.support())
        if (v != seq.main_var) throw InvalidInput("tarski_query: parameter " + v + " left unspecialized");
    if (p1.is_zero()) throw InvalidInput("tarski_query: P1 vanishes identically under the specialization");
    const int p = static_cast<int>(seq.principal.size()) - 1;
    if (p1.degree(seq.main_var) < p) {
        // Leading coefficient vanished: the stored sequence no longer specializes well.
        const MultiPoly p2 = seq.p2.specialize(specialization);
        if (p1.degree(seq.main_var) < 1) return 0;
        return tarski_query(sturm_habicht_sequence(p1, p2, seq.main_var), {});
    }
    std::vector<int> signs;
    for (int j = p; j >= 0; --j) {
        const MultiPoly v = seq.principal[static_cast<std::size_t>(j)].specialize(specialization);
        if (!v.is_constant()) throw InvalidInput("tarski_query: parameter left unspecialized");
        signs.push_back(v.constant_value().sign());
    }
    return subres::pmv(signs);
}

}  // namespace certsolve
