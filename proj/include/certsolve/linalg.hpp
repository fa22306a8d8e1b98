#pragma once

#include <optional>
#include <vector>

#include "certsolve/rational.hpp"
#include "certsolve/unipoly.hpp"

namespace certsolve {

/// Dense row-major matrix over Q.
using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatVector mat_vec(const RatMatrix& a, const RatVector& x);

/// Characteristic polynomial det(x I - A) via reduction to upper Hessenberg form.
UniPoly charpoly(const RatMatrix& a, const std::string& var = "T");

/// Unique solution of A x = b for square A, or nullopt when A is singular.
std::optional<RatVector> solve(RatMatrix a, RatVector b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

std::size_t rank(RatMatrix a);

}  // namespace certsolve
