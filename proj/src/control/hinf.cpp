#include <algorithm>

#include "certsolve/control.hpp"
#include "certsolve/errors.hpp"
#include "complex_poly.hpp"

namespace certsolve {

namespace {

using detail::ComplexPoly;

const std::string kOmega = "omega";
const std::string kGamma = "gamma";

struct Entry {
    UniPoly num;
    UniPoly den;
};

UniPoly to_uni(const MultiPoly& p, const std::string& var) {
    for (const auto& v : p.support())
        if (v != var) throw InvalidInput("transfer matrix entry depends on " + v);
    return p.is_constant() ? UniPoly::constant(p.constant_value(), var) : p.to_unipoly(var);
}

UniPoly as_uni(const MultiPoly& p, const std::string& var) {
    return p.is_constant() ? UniPoly::constant(p.constant_value(), var) : p.to_unipoly(var);
}

Entry reduce_entry(const RatFunc& f, const std::string& var) {
    UniPoly n = to_uni(f.num, var), d = to_uni(f.den, var);
    if (d.is_zero()) throw InvalidInput("transfer matrix entry has zero denominator");
    if (!n.is_zero()) {
        const UniPoly g = gcd(n, d);
        n = exact_quotient(n, g);
        d = exact_quotient(d, g);
    }
    if (n.degree() > d.degree()) throw InvalidInput("transfer matrix entry is not proper");
    const ComplexPoly di = detail::on_imaginary_axis(MultiPoly::from_unipoly(d), var, kOmega);
    const UniPoly common = gcd(as_uni(di.re, kOmega), as_uni(di.im, kOmega));
    if (!common.is_constant() && count_real_roots(common) > 0) throw InvalidInput("transfer matrix has a pole on the imaginary axis");
    return {n, d};
}

// Enclosure with absolute width <= 2^-bits and dyadic endpoints.
MPInterval enclose(const IsolatingInterval& iv, int bits) {
    const IsolatingInterval r = iv.is_point() ? iv : refine_root(iv, Rational(Integer(1), Integer(1) << static_cast<unsigned>(bits + 1)));
    const Rational mag = std::max(abs(r.lo), abs(r.hi)) + 1;
    const int int_bits = static_cast<int>(bit_length(ceil(mag)));
    return MPInterval(r.lo, r.hi, int_bits + bits + 2);
}

}  // namespace

HinfResult hinf_norm_detailed(const TransferMatrix& g, const std::string& var, std::optional<int> starting_precision) {
    if (g.empty() || g[0].empty()) throw InvalidInput("empty transfer matrix");
    const std::size_t rows = g.size(), cols = g[0].size();
    std::vector<std::vector<Entry>> e(rows);
    bool all_zero = true;
    for (std::size_t r = 0; r < rows; ++r) {
        if (g[r].size() != cols) throw InvalidInput("transfer matrix rows differ in length");
        for (const auto& f : g[r]) {
            e[r].push_back(reduce_entry(f, var));
            all_zero = all_zero && e[r].back().num.is_zero();
        }
    }
    if (all_zero) return {MPInterval(Rational(0)), MultiPoly(Rational(0))};

    // G = M / L with L the lcm of the denominators.
    UniPoly l = UniPoly::constant(1, var);
    for (const auto& row : e)
        for (const auto& x : row) l = exact_quotient(l * x.den, gcd(l, x.den));
    std::vector<std::vector<ComplexPoly>> m(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& x : e[r])
            m[r].push_back(detail::on_imaginary_axis(MultiPoly::from_unipoly(x.num * exact_quotient(l, x.den)), var, kOmega));
    const ComplexPoly li = detail::on_imaginary_axis(MultiPoly::from_unipoly(l), var, kOmega);
    const MultiPoly l2 = li.re * li.re + li.im * li.im;

    // W = gamma^2 |L|^2 I - M^H M; det Phi = det W / |L|^(2 cols).
    const MultiPoly gamma2 = pow(MultiPoly::variable(kGamma), 2);
    std::vector<std::vector<ComplexPoly>> w(cols, std::vector<ComplexPoly>(cols));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < cols; ++k) {
            ComplexPoly h;
            for (std::size_t r = 0; r < rows; ++r) h = h + m[r][j].conj() * m[r][k];
            w[j][k] = ComplexPoly{-h.re, -h.im};
            if (j == k) w[j][k].re += gamma2 * l2;
        }
    const ComplexPoly det = detail::determinant(w);
    if (!det.im.is_zero()) throw InternalError("determinant of a Hermitian matrix is not real");
    MultiPoly n = det.re.with_vars({kOmega, kGamma});
    const MultiPoly den = pow(l2, static_cast<unsigned>(cols));
    n = exact_div(n, gcd(n, den));
    const MultiPoly curve = squarefree_part(n).with_vars({kOmega, kGamma});

    // sigma_max(G(i infinity)): largest root of det(gamma^2 I - Ginf^T Ginf).
    std::vector<std::vector<Rational>> ginf(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& x : e[r]) ginf[r].push_back(x.num.degree() == x.den.degree() ? x.num.lc() / x.den.lc() : Rational(0));
    std::vector<std::vector<ComplexPoly>> winf(cols, std::vector<ComplexPoly>(cols));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < cols; ++k) {
            Rational h(0);
            for (std::size_t r = 0; r < rows; ++r) h += ginf[r][j] * ginf[r][k];
            winf[j][k].re = MultiPoly(-h);
            if (j == k) winf[j][k].re += gamma2;
        }
    const UniPoly at_infinity = as_uni(detail::determinant(winf).re.compacted(), kGamma);

    // Candidates: real roots of StHa_0, of lc_omega(curve) and of the polynomial above.
    const bool has_omega = curve.degree(kOmega) >= 1;
    const UniPoly lc = as_uni(curve.leading_coeff(kOmega).compacted(), kGamma);
    UniPoly automatic = squarefree_part(lc * at_infinity);
    UniPoly all = automatic;
    std::optional<SturmHabichtSequence> seq;
    if (has_omega) {
        seq = sturm_habicht_sequence(curve, MultiPoly(Rational(1), {kOmega, kGamma}), kOmega);
        const UniPoly stha0 = as_uni(seq->entries[0].compacted(), kGamma);
        if (!stha0.is_zero()) all = squarefree_part(all * stha0);
    }
    auto roots = isolate_real_roots(all);

    auto is_automatic = [&](const IsolatingInterval& iv) {
        if (iv.is_point()) return automatic.eval(iv.lo).is_zero();
        return automatic.sign_at(iv.lo) * automatic.sign_at(iv.hi) < 0;
    };
    std::optional<std::size_t> chosen;
    for (std::size_t k = roots.size(); k-- > 0;) {
        if (roots[k].hi.sign() < 0) break;
        if (is_automatic(roots[k])) {
            chosen = k;
            break;
        }
        if (!seq) continue;
        const Rational below = k > 0 ? separating_point(roots[k - 1], roots[k]) : roots[k].lo - 1;
        if (tarski_query(*seq, Assignment{{kGamma, below}}) > 0) {
            chosen = k;
            break;
        }
    }
    if (!chosen) throw InternalError("no admissible candidate for the norm");
    const IsolatingInterval& best = roots[*chosen];

    if (starting_precision) {
        if (*starting_precision < 0) throw InvalidInput("precision must be non-negative");
        return {enclose(best, *starting_precision), curve};
    }
    // Coarsest dyadic enclosure that excludes every other candidate.
    for (int bits = 1; bits < 4096; ++bits) {
        const MPInterval out = enclose(best, bits);
        bool separated = true;
        for (std::size_t k = 0; k < roots.size() && separated; ++k) {
            if (k == *chosen) continue;
            roots[k] = roots[k].is_point() ? roots[k] : refine_root(roots[k], out.width() / 4);
            separated = roots[k].hi < out.lower() || roots[k].lo > out.upper();
        }
        if (separated) return {out, curve};
    }
    throw InternalError("could not separate the norm from the other candidates");
}

}  // namespace certsolve
