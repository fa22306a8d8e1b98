#pragma once

// Independent reference computations shared by unit and acceptance tests. None
// of these call into the algorithms they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "certsolve/control.hpp"
#include "certsolve/multipoly.hpp"
#include "certsolve/unipoly.hpp"

namespace certsolve::oracle {

using cd = std::complex<double>;

/// Gaussian elimination over Q.
inline Rational det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

/// Determinantal subresultant S_j of univariate a (deg p) and b (deg q), j < min(p, q)
/// or j = q < p: rows X^(q-j-1) a .. a, then X^(p-j-1) b .. b.
inline UniPoly sylvester_subres(const UniPoly& a, const UniPoly& b, int j) {
    const int p = a.degree();
    const int q = b.degree();
    const auto rows = static_cast<std::size_t>(p + q - 2 * j);
    const int top = p + q - j - 1;  // degree of the first column
    std::vector<std::vector<Rational>> base;
    auto push_shifted = [&](const UniPoly& f, int shift) {
        std::vector<Rational> row(static_cast<std::size_t>(top + 1), Rational(0));
        for (int k = 0; k <= f.degree(); ++k) row[static_cast<std::size_t>(top - (k + shift))] = f.coeff(k);
        base.push_back(row);
    };
    for (int s = q - j - 1; s >= 0; --s) push_shifted(a, s);
    for (int s = p - j - 1; s >= 0; --s) push_shifted(b, s);
    std::vector<Rational> coeffs(static_cast<std::size_t>(j) + 1, Rational(0));
    for (int k = 0; k <= j; ++k) {
        std::vector<std::vector<Rational>> m(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c + 1 < rows; ++c) m[r].push_back(base[r][c]);
            m[r].push_back(base[r][static_cast<std::size_t>(top - k)]);
        }
        coeffs[static_cast<std::size_t>(k)] = det(m);
    }
    return UniPoly(coeffs, a.var());
}

/// Sign of p(k / 2^m) by integer Horner evaluation; `ints` are the coefficients
/// of p scaled to integers.
inline int dyadic_sign(const std::vector<Integer>& ints, const Integer& k, unsigned m) {
    const std::size_t n = ints.size() - 1;
    Integer acc = ints[n];
    for (std::size_t i = n; i-- > 0;) {
        Integer term = ints[i];
        mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), m * static_cast<unsigned>(n - i));
        acc = acc * k + term;
    }
    return sgn(acc);
}

/// Real roots of p in [lo, lo + steps * 2^-m] by exact sign scanning on the grid
/// of step 2^-m, then `halvings` bisection steps per bracket. Exact grid zeros
/// come back as they are. Assumes the grid separates the roots.
inline std::vector<Rational> bisection_roots(const UniPoly& p, long lo, unsigned m, long steps, unsigned halvings) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : p.coeffs()) ints.push_back(c.num() * (den / c.den()));
    auto value = [](const Integer& k, unsigned e) { return Rational(k) / Rational(Integer(1) << e); };

    std::vector<Rational> out;
    const Integer base = Integer(lo) << m;
    int prev = dyadic_sign(ints, base, m);
    if (prev == 0) out.push_back(value(base, m));
    for (long i = 1; i <= steps; ++i) {
        const Integer k = base + i;
        const int s = dyadic_sign(ints, k, m);
        if (s == 0) {
            out.push_back(value(k, m));
        } else if (prev != 0 && s != prev) {
            // Bracket ]a, a + 1[ at scale 2^-e.
            Integer a = k - 1;
            unsigned e = m;
            bool exact = false;
            for (unsigned h = 0; h < halvings && !exact; ++h) {
                a <<= 1;
                ++e;
                const int sm = dyadic_sign(ints, a + 1, e);
                if (sm == 0 || sm == prev) a += 1;
                exact = sm == 0;
            }
            out.push_back(exact ? value(a, e) : value(2 * a + 1, e + 1));
        }
        prev = s;
    }
    return out;
}

inline cd eval_complex(const MultiPoly& p, const std::map<std::string, cd>& at) {
    cd acc = 0;
    for (const auto& [e, c] : p.terms()) {
        cd t = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= std::pow(at.at(p.vars()[i]), e[i]);
        acc += t;
    }
    return acc;
}

inline cd eval_ratfunc(const RatFunc& f, cd s, const std::string& var = "s") {
    return eval_complex(f.num, {{var, s}}) / eval_complex(f.den, {{var, s}});
}

/// Largest singular value for matrices with at most two columns.
inline double sigma_max(const TransferMatrix& g, cd s, const std::string& var = "s") {
    const std::size_t cols = g[0].size();
    cd h[2][2] = {{0, 0}, {0, 0}};
    for (const auto& row : g)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < cols; ++k)
                h[j][k] += std::conj(eval_ratfunc(row[j], s, var)) * eval_ratfunc(row[k], s, var);
    if (cols == 1) return std::sqrt(h[0][0].real());
    const double a = h[0][0].real(), b = h[1][1].real();
    return std::sqrt((a + b) / 2 + std::sqrt((a - b) * (a - b) / 4 + std::norm(h[0][1])));
}

/// max over omega = 0 and 10^4 log-spaced frequencies in [1e-4, 1e4]. A lower
/// bound of the norm.
inline double grid_norm(const TransferMatrix& g, const std::string& var = "s") {
    double best = sigma_max(g, cd(0, 0), var);
    for (int i = 0; i < 10000; ++i) {
        const double w = std::pow(10.0, -4.0 + 8.0 * i / 9999.0);
        best = std::max(best, sigma_max(g, cd(0, w), var));
    }
    return best;
}

}  // namespace certsolve::oracle
