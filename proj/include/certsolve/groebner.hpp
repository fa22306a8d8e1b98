#pragma once

#include <string>
#include <vector>

#include "certsolve/multipoly.hpp"

namespace certsolve {

/// Monomial order on exponent vectors over a fixed variable list.
///
/// Block orders compare the first `split` variables by degrevlex and break ties
/// with degrevlex on the remaining ones; any monomial involving the first block
/// is then larger than every monomial free of it.
struct MonomialOrder {
    enum class Kind { DegRevLex, Lex, Block };
    Kind kind = Kind::DegRevLex;
    int split = 0;

    static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block(int split) { return {Kind::Block, split}; }

    /// Negative, zero or positive as a < b, a == b, a > b.
    int compare(const Exponent& a, const Exponent& b) const;
    std::string name() const;
};

/// Reduced Groebner basis: monic generators, no leading monomial dividing another,
/// sorted by increasing leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<std::string> vars, MonomialOrder order, std::vector<MultiPoly> generators);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<MultiPoly>& generators() const noexcept { return gens_; }
    const std::vector<Exponent>& leading_monomials() const noexcept { return lms_; }
    bool is_unit() const;

private:
    std::vector<std::string> vars_;
    MonomialOrder order_;
    std::vector<MultiPoly> gens_;
    std::vector<Exponent> lms_;
};

/// Leading exponent of p (over `vars`) under `order`; p must be nonzero.
Exponent leading_monomial(const MultiPoly& p, const std::vector<std::string>& vars, const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by `system` over `vars`.
GroebnerBasis buchberger(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars,
                         const MonomialOrder& order = MonomialOrder::degrevlex());
/// Variables taken from the system in order of first appearance.
GroebnerBasis buchberger(const std::vector<MultiPoly>& system, const MonomialOrder& order = MonomialOrder::degrevlex());

/// Fully reduced remainder of p by the basis; zero iff p lies in the ideal.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

bool is_zero_dimensional(const GroebnerBasis& gb);
/// Monomials outside the leading-term ideal, sorted increasing under the basis order.
/// Throws UnsupportedInput when the ideal is not zero-dimensional.
std::vector<Exponent> quotient_basis(const GroebnerBasis& gb);

/// Generators of the intersection of the ideal with Q[keep], each primitive and
/// expressed over `keep` only. An empty list means the zero ideal.
std::vector<MultiPoly> elimination_ideal(const std::vector<MultiPoly>& system, const std::vector<std::string>& keep);

/// S-polynomial of two nonzero polynomials under the given order.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const std::vector<std::string>& vars, const MonomialOrder& order);

}  // namespace certsolve
