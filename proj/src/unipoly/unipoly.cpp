#include "certsolve/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "certsolve/errors.hpp"
#include "certsolve/subresultant.hpp"

namespace certsolve {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c, std::string var) { return UniPoly({c}, std::move(var)); }

UniPoly UniPoly::monomial(const Rational& c, int k, std::string var) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v), std::move(var));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots, std::string var) {
    UniPoly out = constant(1, var);
    for (const auto& r : roots) out = out * UniPoly({-r, Rational(1)}, var);
    return out;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

MPInterval UniPoly::eval(const MPInterval& x, int precision) const { return iv_eval_poly(c_, x, precision); }

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
    return compose(UniPoly({b, a}, var_));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc({}, var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it, var_);
    return acc.with_var(var_);
}

UniPoly UniPoly::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r), var_);
}

UniPoly UniPoly::negated_arg() const {
    std::vector<Rational> r = c_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return UniPoly(std::move(r), var_);
}

UniPoly UniPoly::primitive() const {
    if (c_.empty()) return *this;
    Integer l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& c : c_) {
        Integer v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (c_.back().sign() < 0) g = -g;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (const auto& v : ints) out.emplace_back(Integer(v / g));
    return UniPoly(std::move(out), var_);
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    return (Rational(1) / lc()) * *this;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return UniPoly(std::move(r), var_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r), a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r), a.var_);
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
    std::vector<Rational> r;
    r.reserve(a.c_.size());
    for (const auto& c : a.c_) r.push_back(s * c);
    return UniPoly(std::move(r), a.var_);
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        os << var_;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------- division, gcd

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly({}, a.var()), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational inv = Rational(1) / b.lc();
    for (int k = a.degree(); k >= db; --k) {
        const Rational f = r[static_cast<std::size_t>(k)] * inv;
        q[static_cast<std::size_t>(k - db)] = f;
        if (f.is_zero()) continue;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(q), a.var()), UniPoly(std::move(r), a.var())};
}

UniPoly rem(const UniPoly& a, const UniPoly& b) { return divrem(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.primitive();
    UniPoly y = b.primitive();
    while (!y.is_zero()) {
        UniPoly r = rem(x, y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive();
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InternalError("exact_quotient: nonzero remainder");
    return q;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("square-free part of the zero polynomial");
    if (p.is_constant()) return UniPoly::constant(1, p.var());
    return exact_quotient(p, gcd(p, p.derivative())).primitive();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("square-free decomposition of the zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.is_constant()) return out;
    // Yun's algorithm.
    UniPoly a = p.primitive();
    UniPoly b = gcd(a, a.derivative());
    UniPoly c = exact_quotient(a, b);
    UniPoly d = exact_quotient(a.derivative(), b) - c.derivative();
    int k = 1;
    while (!c.is_constant()) {
        UniPoly f = gcd(c, d);
        if (!f.is_constant()) out.emplace_back(f.primitive(), k);
        c = exact_quotient(c, f);
        d = exact_quotient(d, f) - c.derivative();
        ++k;
    }
    return out;
}

// ---------------------------------------------------------------- Sturm-Habicht counting

namespace {

std::vector<int> principal_signs(const subres::SignedSubresultants<Rational>& s) {
    std::vector<int> signs;
    for (auto it = s.principal.rbegin(); it != s.principal.rend(); ++it) signs.push_back(it->sign());
    return signs;
}

}  // namespace

int cauchy_index(const UniPoly& b, const UniPoly& a) {
    if (a.is_zero()) throw InvalidInput("cauchy_index: zero denominator");
    if (a.degree() < 1) return 0;
    if (b.degree() >= a.degree()) throw InvalidInput("cauchy_index: need deg b < deg a");
    auto s = subres::signed_subresultants(a.coeffs(), b.coeffs(), Rational(0), Rational(1));
    return subres::pmv(principal_signs(s));
}

int tarski_query(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero()) throw InvalidInput("tarski_query: zero polynomial");
    if (p.degree() < 1) return 0;
    return cauchy_index(rem(p.derivative() * q, p), p);
}

int count_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("count_real_roots: zero polynomial");
    if (p.degree() < 1) return 0;
    return cauchy_index(p.derivative(), p);
}

// ---------------------------------------------------------------- isolation

namespace {

using IPoly = std::vector<Integer>;

IPoly integer_coeffs(const UniPoly& p) {
    UniPoly q = p.primitive();
    IPoly out;
    out.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) out.push_back(c.num());
    return out;
}

int sign_variations(const IPoly& p) {
    int v = 0;
    int last = 0;
    for (const auto& c : p) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// p(x) -> p(x + 1)
IPoly taylor_shift1(IPoly p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) p[j - 1] += p[j];
    return p;
}

// p(x) -> 2^n p(x / 2)
IPoly halve_arg(const IPoly& p) {
    const std::size_t n = p.size() - 1;
    IPoly out(p.size());
    for (std::size_t i = 0; i <= n; ++i) mpz_mul_2exp(out[i].get_mpz_t(), p[i].get_mpz_t(), n - i);
    return out;
}

// p(x) -> p(c x)
IPoly scale_arg(const IPoly& p, const Integer& c) {
    IPoly out(p.size());
    Integer pw = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i] * pw;
        pw *= c;
    }
    return out;
}

// Descartes bound for roots of q in (0, 1).
int descartes_01(const IPoly& q) {
    IPoly r(q.rbegin(), q.rend());
    return sign_variations(taylor_shift1(std::move(r)));
}

// Divide by (x - 1), exact.
IPoly deflate_one(const IPoly& p) {
    IPoly out(p.size() - 1);
    Integer carry = 0;
    for (std::size_t i = p.size() - 1; i >= 1; --i) {
        carry += p[i];
        out[i - 1] = carry;
    }
    return out;
}

struct RawInterval {
    Rational lo, hi;
};

// Positive roots of p in (0, bound): Vincent-Collins-Akritas bisection.
void isolate_positive(const IPoly& p, const Integer& bound, std::vector<RawInterval>& out) {
    struct Node {
        IPoly q;
        Rational a, b;
    };
    std::vector<Node> stack;
    stack.push_back({scale_arg(p, bound), Rational(0), Rational(bound)});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (node.q.size() <= 1) continue;
        const int v = descartes_01(node.q);
        if (v == 0) continue;
        if (v == 1) {
            out.push_back({node.a, node.b});
            continue;
        }
        const Rational mid = (node.a + node.b) / Rational(2);
        IPoly left = halve_arg(node.q);
        IPoly right = taylor_shift1(left);
        if (sgn(right[0]) == 0) {
            out.push_back({mid, mid});
            right.erase(right.begin());
            left = deflate_one(left);
        }
        stack.push_back({std::move(right), mid, node.b});
        stack.push_back({std::move(left), node.a, mid});
    }
}

Integer cauchy_bound_pow2(const IPoly& p) {
    // 1 + max |a_i / a_n|, rounded up to a power of two strictly larger.
    Rational m(0);
    const Integer& lead = p.back();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, abs(Rational(p[i], lead)));
    Rational b = Rational(1) + m;
    Integer pw = 1;
    while (Rational(pw) <= b) pw *= 2;
    return pw;
}

// Attempt to pin a rational root inside an open isolating interval.
IsolatingInterval detect_rational_root(IsolatingInterval iv) {
    const UniPoly& w = *iv.witness;
    if (w.degree() == 1) {
        Rational r = -w.coeff(0) / w.coeff(1);
        iv.lo = iv.hi = r;
        return iv;
    }
    // Two distinct rationals with denominators <= |lc| are >= 1/lc^2 apart, so once the
    // interval is narrower than that, the simplest rational inside is the only candidate.
    const Rational lead = abs(w.lc());
    const Rational target = Rational(1) / (lead * lead * Rational(2));
    Rational s = simplest_between(iv.lo, iv.hi);
    if (w.sign_at(s) == 0) {
        iv.lo = iv.hi = s;
        return iv;
    }
    if (iv.width() > target) iv = refine_root(iv, target);
    if (iv.is_point()) return iv;
    s = simplest_between(iv.lo, iv.hi);
    if (Rational(s.den()) <= lead && w.sign_at(s) == 0) iv.lo = iv.hi = s;
    return iv;
}

// A bisection interval may end at a root found exactly at a midpoint. Divide those
// roots out and bisect until neither endpoint is a root of the witness.
IsolatingInterval clear_root_endpoints(IsolatingInterval iv) {
    const UniPoly& w = *iv.witness;
    UniPoly g = w;
    bool lo_bad = w.sign_at(iv.lo) == 0;
    bool hi_bad = w.sign_at(iv.hi) == 0;
    if (lo_bad) g = exact_quotient(g, UniPoly({-iv.lo, Rational(1)}, w.var()));
    if (hi_bad) g = exact_quotient(g, UniPoly({-iv.hi, Rational(1)}, w.var()));
    while (lo_bad || hi_bad) {
        const Rational m = iv.midpoint();
        const int sm = g.sign_at(m);
        if (sm == 0) {
            iv.lo = iv.hi = m;
            return iv;
        }
        if (sm == g.sign_at(iv.lo)) {
            iv.lo = m;
            lo_bad = false;
        } else {
            iv.hi = m;
            hi_bad = false;
        }
    }
    return iv;
}

int log2_floor(const Rational& w) {
    return static_cast<int>(bit_length(w.num())) - static_cast<int>(bit_length(w.den()));
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("isolate_real_roots: zero polynomial");
    std::vector<IsolatingInterval> result;
    if (p.is_constant()) return result;

    const auto factors = squarefree_decomposition(p);
    auto witness = std::make_shared<const UniPoly>(squarefree_part(p));

    IPoly w = integer_coeffs(*witness);
    std::vector<RawInterval> raw;
    if (sgn(w[0]) == 0) {
        raw.push_back({Rational(0), Rational(0)});
        w.erase(w.begin());
    }
    if (w.size() > 1) {
        const Integer bound = cauchy_bound_pow2(w);
        std::vector<RawInterval> pos;
        isolate_positive(w, bound, pos);
        raw.insert(raw.end(), pos.begin(), pos.end());
        IPoly wn = w;
        for (std::size_t i = 1; i < wn.size(); i += 2) wn[i] = -wn[i];
        std::vector<RawInterval> neg;
        isolate_positive(wn, bound, neg);
        for (const auto& r : neg) raw.push_back({-r.hi, -r.lo});
    }
    std::sort(raw.begin(), raw.end(), [](const RawInterval& a, const RawInterval& b) { return a.lo < b.lo; });

    for (const auto& r : raw) {
        IsolatingInterval iv{r.lo, r.hi, witness, 1};
        if (!iv.is_point()) iv = clear_root_endpoints(std::move(iv));
        if (!iv.is_point()) iv = detect_rational_root(std::move(iv));
        // Multiplicity: the square-free factor that vanishes at this root.
        for (const auto& [f, k] : factors) {
            bool hit = false;
            if (iv.is_point()) {
                hit = f.sign_at(iv.lo) == 0;
            } else {
                const int slo = f.sign_at(iv.lo);
                const int shi = f.sign_at(iv.hi);
                hit = slo * shi < 0;
            }
            if (hit) {
                iv.multiplicity = k;
                break;
            }
        }
        result.push_back(std::move(iv));
    }
    return result;
}

IsolatingInterval refine_root(const IsolatingInterval& iv, const Rational& target_width) {
    if (iv.is_point() || iv.width() <= target_width) return iv;
    const UniPoly& w = *iv.witness;
    const UniPoly dw = w.derivative();
    IsolatingInterval out = iv;
    const int slo = w.sign_at(out.lo);
    if (slo == 0 || slo * w.sign_at(out.hi) >= 0) throw InternalError("refine_root: interval lost its sign change");

    auto make_point = [&](const Rational& r) {
        out.lo = out.hi = r;
        return out;
    };

    while (out.width() > target_width) {
        const Rational width = out.width();
        const int prec = 64 + 2 * std::max(0, -log2_floor(width));
        bool advanced = false;
        const MPInterval box(out.lo, out.hi, prec);
        const MPInterval slope = dw.eval(box, prec);
        if (!slope.contains_zero()) {
            const Rational m = out.midpoint();
            const Rational wm = w.eval(m);
            if (wm.is_zero()) return make_point(m);
            const MPInterval step = MPInterval(m, prec) - MPInterval(wm, prec) / slope;
            const Rational nlo = std::max(out.lo, step.lower());
            const Rational nhi = std::min(out.hi, step.upper());
            if (nlo < nhi && (nhi - nlo) * Rational(2) <= width) {
                const int s_lo = w.sign_at(nlo);
                const int s_hi = w.sign_at(nhi);
                if (s_lo == 0) return make_point(nlo);
                if (s_hi == 0) return make_point(nhi);
                if (s_lo == slo && s_hi == -slo) {
                    out.lo = nlo;
                    out.hi = nhi;
                    advanced = true;
                }
            }
        }
        if (!advanced) {
            const Rational m = out.midpoint();
            const int sm = w.sign_at(m);
            if (sm == 0) return make_point(m);
            if (sm == slo) out.lo = m;
            else out.hi = m;
        }
    }
    return out;
}

Rational separating_point(IsolatingInterval& a, IsolatingInterval& b) {
    for (;;) {
        if (a.hi < b.lo) return (a.hi + b.lo) / Rational(2);
        if (a.hi == b.lo && !a.is_point() && !b.is_point()) return a.hi;
        if (b.lo < a.hi) throw InternalError("separating_point: overlapping isolating intervals");
        // They touch at an exact root: shrink whichever side is an open interval.
        if (!a.is_point()) a = refine_root(a, a.width() / Rational(2));
        if (!b.is_point()) b = refine_root(b, b.width() / Rational(2));
    }
}

}  // namespace certsolve
