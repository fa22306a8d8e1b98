#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "certsolve/interval.hpp"
#include "certsolve/multipoly.hpp"
#include "certsolve/paramspace.hpp"
#include "certsolve/polytext.hpp"

namespace certsolve {

// ---------------------------------------------------------------- identification

/// x' = f(x, mu), y = g(x, mu) with polynomial right-hand sides.
struct OdeModel {
    std::vector<std::string> states;
    std::vector<std::string> params;
    MultiPoly output;                    // g
    std::vector<MultiPoly> dynamics;     // f, one per state
    std::vector<std::string> controls;   // known inputs; not supported yet
    std::string output_name = "y";
};

/// Name of the j-th derivative of a state or of the output: "x_0", "x_1", ...
std::string derivative_symbol(const std::string& name, int order);

/// Output equations y_j - D^j g for j = 0..h, then x_{j+1} - D^j f for j = 0..h-1,
/// where D is the formal derivation with D x_k = x_{k+1} and D mu = 0.
/// Each polynomial is expressed over y_*, params and x_* symbols.
std::vector<MultiPoly> prolong_ode(const OdeModel& model, int h);

struct DataPoint {
    Rational t;
    Rational y;
};

struct Candidate {
    std::vector<std::string> names;  // params then initial states (x_0 symbols)
    std::vector<MPInterval> values;
    SolutionBox box;                 // box of the solved system, coordinates in box_vars order
    std::vector<std::string> box_vars;
    double fit_residual = 0.0;
};

struct IdentificationOptions {
    int precision = 64;
    bool nonnegative_only = false;
    std::size_t max_terms = 200000;
};

/// Solves the prolonged system with y_j replaced by the given derivative values
/// (y(t0), y'(t0), ...). Uses the full system when it is zero-dimensional and
/// consistent, otherwise the first square zero-dimensional subsystem. Candidates
/// are ranked by the squared residual of the order-h Taylor model at the data.
std::vector<Candidate> identify_from_derivatives(const OdeModel& model, int h, const std::vector<Rational>& output_derivatives,
                                                 const std::vector<DataPoint>& data, const Rational& t0,
                                                 const IdentificationOptions& opts = {});

/// Interpolates the data (Newton divided differences), differentiates at t0 and
/// calls identify_from_derivatives.
std::vector<Candidate> identify_parameters(const OdeModel& model, const std::vector<DataPoint>& data, int h, const Rational& t0,
                                           const IdentificationOptions& opts = {});

/// Interpolating polynomial through the data. Throws InvalidInput on repeated abscissae.
UniPoly newton_interpolation(const std::vector<DataPoint>& data, const std::string& var = "t");

// ---------------------------------------------------------------- stability

/// True iff d has no root in the closed unit disk.
bool unit_disk_stability_1d(const UniPoly& d);

struct MoebiusPair {
    MultiPoly re;
    MultiPoly im;
};

/// Real and imaginary parts of the numerator of D((x_1 - i)/(x_1 + i), ...).
/// Other variables of D (parameters) are left untouched.
MoebiusPair moebius_split(const MultiPoly& d, const std::vector<std::string>& zvars, const std::vector<std::string>& xvars);

/// Structural stability of a two-variable denominator: no zero in the closed unit bidisk.
bool stability_2d(const MultiPoly& d, const std::string& z1 = "z1", const std::string& z2 = "z2");

struct CellVerdict {
    SamplePoint point;
    bool stable = false;
};

struct StabilityVerdict {
    std::vector<std::string> params;
    std::vector<MultiPoly> boundary;  // polynomials the decomposition is adapted to
    std::vector<CellVerdict> cells;
};

StabilityVerdict stability_parametric(const MultiPoly& d, const std::vector<std::string>& params, const std::string& z1 = "z1",
                                      const std::string& z2 = "z2");

// ---------------------------------------------------------------- H-infinity norm

using TransferMatrix = std::vector<std::vector<RatFunc>>;

struct HinfResult {
    MPInterval norm;
    MultiPoly curve;  // square-free numerator of det(gamma^2 I - G^T(-i w) G(i w)) in (w, gamma)
};

/// Enclosure of sup_w sigma_max(G(i w)). Without a precision the interval is the
/// coarsest dyadic rounding that still separates the maximal candidate from the
/// others; with one, its width is at most 2^-precision.
HinfResult hinf_norm_detailed(const TransferMatrix& g, const std::string& var = "s",
                              std::optional<int> starting_precision = std::nullopt);
inline MPInterval hinf_norm(const TransferMatrix& g, const std::string& var = "s",
                            std::optional<int> starting_precision = std::nullopt) {
    return hinf_norm_detailed(g, var, starting_precision).norm;
}

}  // namespace certsolve
