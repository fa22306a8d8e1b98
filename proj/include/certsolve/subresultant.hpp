#pragma once

// Signed subresultant machinery over an arbitrary integral domain R.
//
// A polynomial in the main variable is a dense std::vector<R> (index = degree,
// no trailing zeros). R must provide +, -, *, unary -, and the free functions
//   bool is_zero(const R&);
//   R exact_div(const R&, const R&);   // exact quotient, divisor nonzero
// Both Rational (field) and MultiPoly (parameter ring) satisfy this.

#include <cstddef>
#include <vector>

#include "certsolve/errors.hpp"

namespace certsolve::subres {

template <class R>
using Dense = std::vector<R>;

template <class R>
void trim(Dense<R>& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class R>
int degree(const Dense<R>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class R>
R lcof(const Dense<R>& p, const R& zero) {
    return p.empty() ? zero : p.back();
}

template <class R>
Dense<R> scale(const Dense<R>& p, const R& s) {
    Dense<R> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c * s);
    trim(out);
    return out;
}

template <class R>
Dense<R> divide_exact(const Dense<R>& p, const R& s) {
    Dense<R> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(is_zero(c) ? c : exact_div(c, s));
    trim(out);
    return out;
}

template <class R>
Dense<R> negate(const Dense<R>& p) {
    Dense<R> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(-c);
    return out;
}

template <class R>
Dense<R> multiply(const Dense<R>& a, const Dense<R>& b, const R& zero) {
    if (a.empty() || b.empty()) return {};
    Dense<R> out(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    trim(out);
    return out;
}

template <class R>
Dense<R> derivative(const Dense<R>& p) {
    Dense<R> out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * R(static_cast<long>(i)));
    trim(out);
    return out;
}

template <class R>
R power(const R& base, int e, const R& one) {
    R out = one;
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class R>
Dense<R> prem(Dense<R> a, const Dense<R>& b) {
    if (b.empty()) throw InvalidInput("pseudo-remainder by zero polynomial");
    const int db = degree(b);
    int e = degree(a) - db + 1;
    if (e <= 0) return a;
    const R lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        const R la = a.back();
        const int shift = degree(a) - db;
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i) {
            auto& slot = a[static_cast<std::size_t>(i + shift)];
            slot = slot - la * b[static_cast<std::size_t>(i)];
        }
        a.pop_back();
        trim(a);
        --e;
    }
    // Pad the multiplier up to the full exponent so the result is deterministic.
    for (; e > 0; --e)
        for (auto& c : a) c = c * lb;
    trim(a);
    return a;
}

/// Signed subresultant sequence of P (degree p >= 1) and Q (deg Q < p, treated as
/// having formal degree p - 1).
///
/// polys[j] is sResP_j for j = 0..p (polys[p] = P, polys[p-1] = Q), and
/// principal[j] is its coefficient of X^j, except principal[p] = lc(P).
template <class R>
struct SignedSubresultants {
    std::vector<Dense<R>> polys;
    std::vector<R> principal;
};

template <class R>
SignedSubresultants<R> signed_subresultants(const Dense<R>& P, const Dense<R>& Q, const R& zero, const R& one) {
    const int p = degree(P);
    if (p < 1) throw InvalidInput("signed subresultants need deg P >= 1");
    if (degree(Q) >= p) throw InvalidInput("signed subresultants need deg Q < deg P");

    const auto np = static_cast<std::size_t>(p);
    std::vector<Dense<R>> sr(np + 1);
    std::vector<R> s(np + 1, zero);
    std::vector<R> t(np + 1, zero);
    auto coef = [&](const Dense<R>& f, int k) { return k >= 0 && k <= degree(f) ? f[static_cast<std::size_t>(k)] : zero; };

    sr[np] = P;
    s[np] = one;
    t[np] = one;
    sr[np - 1] = Q;
    t[np - 1] = lcof(Q, zero);
    s[np - 1] = coef(Q, p - 1);

    int i = p + 1;
    int j = p;
    while (j >= 1 && !sr[static_cast<std::size_t>(j - 1)].empty()) {
        const auto uj = static_cast<std::size_t>(j);
        const Dense<R>& B = sr[uj - 1];
        const int k = degree(B);
        const auto uk = static_cast<std::size_t>(k);
        R multiplier = zero;
        if (k == j - 1) {
            s[uj - 1] = t[uj - 1];
            multiplier = s[uj - 1] * s[uj - 1];
        } else {
            s[uj - 1] = zero;
            for (int d = 1; d <= j - k - 1; ++d) {
                R v = exact_div(t[uj - 1] * t[static_cast<std::size_t>(j - d)], s[uj]);
                t[static_cast<std::size_t>(j - d - 1)] = (d % 2 == 1) ? -v : v;
            }
            s[uk] = t[uk];
            for (int l = j - 2; l >= k + 1; --l) {
                sr[static_cast<std::size_t>(l)].clear();
                s[static_cast<std::size_t>(l)] = zero;
            }
            sr[uk] = divide_exact(scale(B, s[uk]), t[uj - 1]);
            multiplier = t[uj - 1] * s[uk];
        }
        if (k == 0) {
            j = 0;
            break;
        }
        // -Rem(multiplier * A, B) / (s_j t_{i-1}), with Rem taken over the fraction field:
        // Rem(c A, B) = c prem(A, B) / lc(B)^e.
        const Dense<R>& A = sr[static_cast<std::size_t>(i - 1)];
        const int e = degree(A) - k + 1;
        Dense<R> pr = prem(A, B);
        R den = power(B.back(), e, one) * s[uj] * t[static_cast<std::size_t>(i - 1)];
        sr[uk - 1] = negate(divide_exact(scale(pr, multiplier), den));
        t[uk - 1] = lcof(sr[uk - 1], zero);
        i = j;
        j = k;
    }
    for (int l = j - 2; l >= 0; --l) {
        sr[static_cast<std::size_t>(l)].clear();
        s[static_cast<std::size_t>(l)] = zero;
    }
    // The principal coefficient of a zero entry is zero; make sure s agrees with sr.
    for (int l = 0; l < p; ++l)
        if (sr[static_cast<std::size_t>(l)].empty()) s[static_cast<std::size_t>(l)] = zero;
    s[np] = P.back();
    return {std::move(sr), std::move(s)};
}

/// (-1)^(k(k-1)/2)
inline int epsilon(int k) {
    const int r = ((k % 4) + 4) % 4;
    return (r == 2 || r == 3) ? -1 : 1;
}

/// Generalized permanences minus variations of a sign sequence listed from the
/// highest index down; the first entry must be nonzero.
inline int pmv(const std::vector<int>& signs_high_to_low) {
    int total = 0;
    int last_idx = -1;
    int last_sign = 0;
    for (std::size_t idx = 0; idx < signs_high_to_low.size(); ++idx) {
        const int sg = signs_high_to_low[idx];
        if (sg == 0) continue;
        if (last_idx >= 0) {
            const int gap = static_cast<int>(idx) - last_idx;
            if (gap % 2 == 1) total += epsilon(gap) * last_sign * sg;
        }
        last_idx = static_cast<int>(idx);
        last_sign = sg;
    }
    return total;
}

}  // namespace certsolve::subres
