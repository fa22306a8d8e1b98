#pragma once

#include <map>
#include <string>
#include <vector>

#include "certsolve/rational.hpp"
#include "certsolve/unipoly.hpp"

namespace certsolve {

using Exponent = std::vector<int>;
using Assignment = std::map<std::string, Rational>;

/// Sparse polynomial over Q in an ordered list of named variables.
///
/// Terms are keyed by exponent vectors (one entry per variable, in list order);
/// zero coefficients are never stored. Binary operations on polynomials with
/// different variable lists first merge the lists (left operand's order first).
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    MultiPoly(long c);  // NOLINT(google-explicit-constructor)
    MultiPoly(const Rational& c, std::vector<std::string> vars = {});

    static MultiPoly variable(const std::string& name, std::vector<std::string> vars = {});
    static MultiPoly from_terms(std::vector<std::string> vars, const std::map<Exponent, Rational>& terms);
    /// Lift a univariate polynomial; its variable name is used.
    static MultiPoly from_unipoly(const UniPoly& p);
    /// sum coeffs[k] * var^k
    static MultiPoly from_dense(const std::vector<MultiPoly>& coeffs, const std::string& var);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    int var_index(const std::string& name) const;  // -1 when absent

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for zero); throws InvalidInput otherwise.
    Rational constant_value() const;
    bool depends_on(const std::string& var) const;
    /// Variables that actually occur, in list order.
    std::vector<std::string> support() const;

    int degree(const std::string& var) const;  // -1 for the zero polynomial
    int total_degree() const;
    /// Coefficient of var^k, as a polynomial over the same variable list.
    MultiPoly coeff(const std::string& var, int k) const;
    MultiPoly leading_coeff(const std::string& var) const { return coeff(var, degree(var)); }
    /// Coefficients in var, index = degree (free of var).
    std::vector<MultiPoly> to_dense(const std::string& var) const;
    /// Requires every occurring variable to be `var` (or the polynomial to be constant).
    UniPoly to_unipoly(const std::string& var) const;

    /// Lex-leading coefficient in list order (the last map entry).
    Rational lex_leading_coeff() const;

    /// Same polynomial over another variable list containing every occurring variable.
    MultiPoly with_vars(const std::vector<std::string>& vars) const;
    /// Drop variables that do not occur.
    MultiPoly compacted() const;

    MultiPoly specialize(const Assignment& values) const;
    Rational evaluate(const Assignment& values) const;
    MultiPoly partial_derivative(const std::string& var) const;
    /// Substitute var := replacement.
    MultiPoly substitute(const std::string& var, const MultiPoly& replacement) const;

    /// Integer coefficients with gcd 1 and positive lex-leading coefficient.
    MultiPoly primitive() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
    /// Equal as polynomials (variable lists may differ).
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

private:
    void add_term(const Exponent& e, const Rational& c);

    std::vector<std::string> vars_;
    std::map<Exponent, Rational> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exp);
/// Put both polynomials on the merged variable list.
void unify(MultiPoly& a, MultiPoly& b);

/// Exact quotient a / b. Throws InternalError when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
/// True when b divides a; quotient stored in q.
bool divides(const MultiPoly& b, const MultiPoly& a, MultiPoly* q = nullptr);

/// Greatest common divisor over Q, normalized by primitive(); gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
/// Product of the distinct irreducible factors (up to a constant), normalized by primitive().
MultiPoly squarefree_part(const MultiPoly& p);
/// Pairwise coprime, square-free, nonconstant polynomials whose products generate
/// the same zero sets as the inputs. Sorted by to_string for determinism.
std::vector<MultiPoly> coprime_base(const std::vector<MultiPoly>& polys);

/// Classical subresultants Sres_j(p1, p2) in `main_var`, j = 0..d with d = max degree.
/// entries[0] is the resultant; entries[d] is the input of larger degree.
struct SubresSequence {
    std::string main_var;
    std::vector<MultiPoly> entries;
};

SubresSequence subresultant_sequence(const MultiPoly& p1, const MultiPoly& p2, const std::string& var);

/// Sturm-Habicht sequence of (p1, p2): the signed subresultants of p1 and the
/// remainder of p1' p2 by p1, scaled by an even power of lc(p1) so that no
/// division by lc(p1) is needed. entries[j] and principal[j] for j = 0..deg p1.
struct SturmHabichtSequence {
    std::string main_var;
    MultiPoly p1;
    MultiPoly p2;
    std::vector<MultiPoly> entries;
    std::vector<MultiPoly> principal;
};

SturmHabichtSequence sturm_habicht_sequence(const MultiPoly& p1, const MultiPoly& p2, const std::string& var);

/// #{x : p1(x) = 0, p2(x) > 0} - #{x : p1(x) = 0, p2(x) < 0} after substituting the
/// parameter values. Recomputes from the specialized inputs when lc(p1) vanishes.
/// Throws InvalidInput if p1 vanishes identically or a parameter is left free.
int tarski_query(const SturmHabichtSequence& seq, const Assignment& specialization);

MultiPoly resultant(const MultiPoly& p1, const MultiPoly& p2, const std::string& var);
/// (-1)^(d(d-1)/2) res(p, p') / lc(p), d = deg p.
MultiPoly discriminant(const MultiPoly& p, const std::string& var);

}  // namespace certsolve
