#pragma once

#include <string>
#include <vector>

#include "certsolve/multipoly.hpp"

namespace certsolve {

/// Polynomials in the parameters whose zero set contains the discriminant variety.
struct DiscriminantVariety {
    std::vector<std::string> params;
    std::vector<MultiPoly> polys;  // square-free, pairwise coprime, nonconstant
};

/// Critical-locus projection (system plus the Jacobian determinant, variables
/// eliminated) together with, for each variable x_k, the leading coefficient of a
/// minimal-degree generator of the elimination ideal in {x_k} and the parameters.
/// Throws UnsupportedInput when the system is not zero-dimensional at a generic
/// parameter point, or when its solutions are generically singular.
DiscriminantVariety discriminant_variety(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars,
                                         const std::vector<std::string>& params);

using SamplePoint = std::vector<Rational>;

/// Open-cell decomposition of parameter space. po[k] and pt[k] describe level k+1:
/// po[k] lives in params[0..k], pt[k] holds points with k+1 coordinates.
struct CadTree {
    std::vector<std::string> params;
    std::vector<std::vector<MultiPoly>> po;
    std::vector<std::vector<SamplePoint>> pt;
};

/// Builds the projection sets bottom-up from the given polynomials and lifts
/// sample points: one before the first root, one between consecutive roots and
/// one after the last root of the product of the level's polynomials.
CadTree open_cad(const std::vector<MultiPoly>& polys, const std::vector<std::string>& params);

/// Top-dimensional sample points.
std::vector<SamplePoint> sample_points(const CadTree& cad);

/// Sorted rational points interleaving the distinct real roots of p, which must be
/// a nonzero univariate polynomial: leftmost - 1, separators, rightmost + 1; {0}
/// when p has no real roots.
std::vector<Rational> interleaving_points(const UniPoly& p);

}  // namespace certsolve
