#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "certsolve/multipoly.hpp"
#include "certsolve/unipoly.hpp"

namespace certsolve {

/// Quotient of two polynomials over the same variable list; den is never zero.
struct RatFunc {
    MultiPoly num;
    MultiPoly den;
};

/// Parse infix text ("3*x^2*y - 1/2*z + 0.25") over the declared variables.
/// Supports + - * / ^ (non-negative integer exponents), parentheses, unary minus,
/// and decimal or scientific literals. Division is allowed by constants only.
/// Throws ParseError on malformed text or undeclared identifiers.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Same grammar, division by arbitrary nonzero polynomials allowed.
RatFunc parse_ratfunc(std::string_view text, const std::vector<std::string>& vars);

UniPoly parse_unipoly(std::string_view text, const std::string& var = "x");

}  // namespace certsolve
