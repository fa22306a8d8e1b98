#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "certsolve/interval.hpp"
#include "certsolve/rational.hpp"

namespace certsolve {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of X^i;
/// the zero polynomial has no coefficients, otherwise the last one is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x");
    UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

    static UniPoly constant(const Rational& c, std::string var = "x");
    /// The monomial c * X^k.
    static UniPoly monomial(const Rational& c, int k, std::string var = "x");
    /// The polynomial with the given roots, leading coefficient 1.
    static UniPoly from_roots(const std::vector<Rational>& roots, std::string var = "x");

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    const std::string& var() const noexcept { return var_; }
    UniPoly with_var(std::string var) const { return UniPoly(c_, std::move(var)); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Rational(0); }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }
    MPInterval eval(const MPInterval& x, int precision = 0) const;

    UniPoly derivative() const;
    /// p(x) -> p(a x + b)
    UniPoly compose_affine(const Rational& a, const Rational& b) const;
    UniPoly compose(const UniPoly& inner) const;
    /// x^n p(1/x) with n = degree.
    UniPoly reversed() const;
    /// p(-x)
    UniPoly negated_arg() const;

    /// Scaled to integer coefficients with gcd 1 and positive leading coefficient.
    UniPoly primitive() const;
    UniPoly monic() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

private:
    void trim();

    std::vector<Rational> c_;
    std::string var_ = "x";
};

/// Quotient and remainder of Euclidean division over Q. Throws InvalidInput on a zero divisor.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
/// Greatest common divisor, normalized primitive with positive leading coefficient (gcd(0,0) = 0).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Exact quotient a / b; throws InternalError when b does not divide a.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), primitive with positive leading coefficient. Throws InvalidInput on p = 0.
UniPoly squarefree_part(const UniPoly& p);
/// Yun decomposition: pairs (f_k, k) with p = c * prod f_k^k, each f_k square-free primitive, nonconstant.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Number of distinct real roots, from the generalized permanences-minus-variations
/// count over the Sturm-Habicht principal coefficients of (p, 1).
int count_real_roots(const UniPoly& p);

/// Tarski query #{p=0, q>0} - #{p=0, q<0} over the reals.
int tarski_query(const UniPoly& p, const UniPoly& q);

/// Cauchy index of b/a over the whole real line, for deg b < deg a.
int cauchy_index(const UniPoly& b, const UniPoly& a);

/// Rational-endpoint interval isolating one real root.
///
/// When lo == hi the root is exactly that rational. Otherwise the open interval
/// ]lo, hi[ holds exactly one root of the witness, and the witness takes
/// opposite nonzero signs at lo and hi.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    std::shared_ptr<const UniPoly> witness;  // square-free, primitive
    int multiplicity = 1;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    MPInterval enclosure(int precision = kDefaultPrecision) const { return MPInterval(lo, hi, precision); }
};

/// Isolating intervals for every real root of p, sorted ascending, pairwise disjoint.
/// Constant nonzero p yields an empty list; p = 0 throws InvalidInput.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p);

/// Nested isolating interval of width <= target_width for the same root.
/// Bisection with exact signs, switching to interval Newton steps once the
/// derivative enclosure over the interval excludes zero.
IsolatingInterval refine_root(const IsolatingInterval& iv, const Rational& target_width);

/// A point strictly between two consecutive isolated roots (a before b), refining
/// either interval when they touch at a root.
Rational separating_point(IsolatingInterval& a, IsolatingInterval& b);

}  // namespace certsolve
