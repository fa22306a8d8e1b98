#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "certsolve/multipoly.hpp"

namespace certsolve::cli {

/// Sectioned text input shared by all subcommands.
///
///     # comment
///     vars: x, y
///     params: u
///     precision: 64
///     eqs:
///     x^2 + y^2 - u
///     x - y
///
/// List sections (vars, params, states) take comma-separated names on the header
/// line. Scalar sections (precision, h, t0, var, output) take one value. Block
/// sections (eqs, dynamics, matrix, data, derivatives) take the following lines
/// up to the next header; a value on the header line counts as the first line.
struct SystemFile {
    std::vector<std::string> vars;
    std::vector<std::string> params;
    std::vector<std::string> states;
    std::map<std::string, std::string> scalars;
    std::map<std::string, std::vector<std::string>> blocks;
    std::map<std::string, std::vector<std::size_t>> block_lines;  // source line of each block entry

    std::optional<std::string> scalar(const std::string& key) const;
    const std::vector<std::string>& block(const std::string& key) const;
};

/// Throws ParseError (with the 1-based line) on unknown sections, stray text or
/// duplicate sections.
SystemFile parse_system_file(std::string_view text);
SystemFile read_system_file(const std::string& path);

/// Canonical rendering; parse_system_file(format_system_file(f)) reproduces f.
std::string format_system_file(const SystemFile& f);

/// Polynomials of the named block over vars followed by params (or `ring` when given).
std::vector<MultiPoly> block_polys(const SystemFile& f, const std::string& key,
                                   const std::vector<std::string>& ring = {});

/// Exact value of a decimal or fraction literal such as "-0.25" or "3/7".
Rational parse_number(std::string_view text);

}  // namespace certsolve::cli
