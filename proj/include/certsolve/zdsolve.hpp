#pragma once

#include <string>
#include <vector>

#include "certsolve/groebner.hpp"
#include "certsolve/interval.hpp"
#include "certsolve/linalg.hpp"
#include "certsolve/multipoly.hpp"
#include "certsolve/unipoly.hpp"

namespace certsolve {

/// Coefficients a_1..a_n of t = sum a_i X_i over the basis variables.
using LinearForm = std::vector<Rational>;

/// Rational univariate representation of a zero-dimensional ideal.
///
/// Solutions correspond to roots b of ft through
/// X_i = coords[i](b) / ft_bar'(b).
struct RUR {
    std::vector<std::string> vars;
    LinearForm separating;
    UniPoly ft;      // characteristic polynomial of multiplication by t; degree = quotient dimension
    UniPoly ft_bar;  // monic square-free part of ft
    std::vector<UniPoly> coords;
};

/// Matrix of multiplication by `f` on the quotient basis (column k = normal form of f * b_k).
RatMatrix multiplication_matrix(const GroebnerBasis& gb, const MultiPoly& f);

/// First separating form in the schedule X_1, ..., X_n, then sum i^j X_i for j = 1, 2, ...
LinearForm separating_element(const GroebnerBasis& gb);

/// Throws InvalidInput when `sep` is not separating, UnsupportedInput when gb is
/// not zero-dimensional.
RUR compute_rur(const GroebnerBasis& gb, const LinearForm& sep);

/// One box per real root of ft, in increasing order of t, each coordinate of
/// width <= 2^-output_precision.
std::vector<SolutionBox> isolate_system(const RUR& rur, int output_precision);

/// Interval enclosure of p over a box given in the order of `vars`.
MPInterval iv_eval(const MultiPoly& p, const std::vector<std::string>& vars, const std::vector<MPInterval>& box,
                   int precision);

/// Krawczyk refinement of an approximate solution of a square system.
/// The box is certified (existence and uniqueness) only when the Krawczyk image
/// falls strictly inside the current box; otherwise certified = false.
SolutionBox interval_newton(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars,
                            const std::vector<Rational>& initial_point, int precision);
/// Variables taken from the system in order of first appearance.
SolutionBox interval_newton(const std::vector<MultiPoly>& system, const std::vector<Rational>& initial_point, int precision);

/// Convenience pipeline: Groebner basis (degrevlex), separating form, RUR, boxes.
/// Throws UnsupportedInput for positive-dimensional systems.
struct SolveResult {
    GroebnerBasis basis;
    RUR rur;
    std::vector<SolutionBox> boxes;
};
SolveResult solve_system(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars, int output_precision);

}  // namespace certsolve
