#include "certsolve/linalg.hpp"

#include "certsolve/errors.hpp"

namespace certsolve {

RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m(n, RatVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k ? b[0].size() : 0;
    RatMatrix out(n, RatVector(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

RatVector mat_vec(const RatMatrix& a, const RatVector& x) {
    RatVector out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) out[i] += a[i][j] * x[j];
    return out;
}

UniPoly charpoly(const RatMatrix& a0, const std::string& var) {
    const std::size_t n = a0.size();
    RatMatrix h = a0;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && h[piv][m - 1].is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            std::swap(h[piv], h[m]);
            for (auto& row : h) std::swap(row[piv], row[m]);
        }
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h[i][m - 1].is_zero()) continue;
            const Rational f = h[i][m - 1] / h[m][m - 1];
            for (std::size_t j = 0; j < n; ++j) h[i][j] -= f * h[m][j];
            for (std::size_t r = 0; r < n; ++r) h[r][m] += f * h[r][i];
        }
    }
    // p_k = det(x I - H[0..k, 0..k]) by the Hessenberg recurrence.
    std::vector<UniPoly> p;
    p.push_back(UniPoly::constant(1, var));
    const UniPoly x = UniPoly::monomial(1, 1, var);
    for (std::size_t k = 0; k < n; ++k) {
        UniPoly next = (x - UniPoly::constant(h[k][k], var)) * p[k];
        Rational prod(1);
        for (std::size_t i = k; i-- > 0;) {
            prod *= h[i + 1][i];
            if (prod.is_zero()) break;
            next = next - (prod * h[i][k]) * p[i];
        }
        p.push_back(next.with_var(var));
    }
    return p[n].with_var(var);
}

std::optional<RatVector> solve(RatMatrix a, RatVector b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw InvalidInput("solve: dimension mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        const Rational inv = Rational(1) / a[c][c];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            const Rational f = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    const std::size_t n = a.size();
    RatMatrix out(n, RatVector(n));
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n, Rational(0));
        e[j] = Rational(1);
        auto col = solve(a, e);
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) out[i][j] = (*col)[i];
    }
    return out;
}

std::size_t rank(RatMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace certsolve
