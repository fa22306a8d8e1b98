#pragma once

#include <string>
#include <vector>

#include "certsolve/multipoly.hpp"

namespace certsolve::detail {

/// re + i * im with real polynomial parts.
struct ComplexPoly {
    MultiPoly re;
    MultiPoly im;

    ComplexPoly() : re(Rational(0)), im(Rational(0)) {}
    ComplexPoly(MultiPoly r, MultiPoly i) : re(std::move(r)), im(std::move(i)) {}

    ComplexPoly conj() const { return {re, -im}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) { return {a.re + b.re, a.im + b.im}; }
inline ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) { return {a.re - b.re, a.im - b.im}; }
inline ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

/// p(i * w) for p real in `var`; other variables are kept.
inline ComplexPoly on_imaginary_axis(const MultiPoly& p, const std::string& var, const std::string& w) {
    ComplexPoly out;
    const auto dense = p.to_dense(var);
    const MultiPoly wv = MultiPoly::variable(w);
    for (std::size_t k = 0; k < dense.size(); ++k) {
        MultiPoly term = dense[k] * pow(wv, static_cast<unsigned>(k));
        const bool negative = (k / 2) % 2 == 1;  // i^k = +-1 or +-i
        if (negative) term = -term;
        if (k % 2 == 0)
            out.re += term;
        else
            out.im += term;
    }
    return out;
}

/// Laplace expansion; fine for the small matrices used here.
inline ComplexPoly determinant(const std::vector<std::vector<ComplexPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return {MultiPoly(Rational(1)), MultiPoly(Rational(0))};
    if (n == 1) return m[0][0];
    ComplexPoly out;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<ComplexPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<ComplexPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        const ComplexPoly t = m[0][c] * determinant(minor);
        out = c % 2 == 0 ? out + t : out - t;
    }
    return out;
}

}  // namespace certsolve::detail
