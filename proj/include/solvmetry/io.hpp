#pragma once

// JSON formats: algebra files, subspace files and LR files.
//
// Algebra file (indices are 0-based, rationals are strings such as "3/7"):
//   {"name": "h3", "dim": 3,
//    "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}],
//    "metric": [["1","0","0"], ...],          optional, default identity
//    "basis_labels": ["X", "Y", "Z"]}          optional
// Brackets may be given for i < j only; [e_j, e_i] is filled in. Entries given
// for both orders must be negatives of each other.
//
// Subspace file: {"ambient_dim": n, "basis": [["1","0",...], ...]}
// LR file:       {"ambient_dim": n, "s1": [[...]], "s2": [[...]]}

#include "solvmetry/metric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace solvmetry {

struct ParsedAlgebra {
  MetricLieAlgebra algebra;
  std::vector<std::string> basis_labels;
};

/// Throws Error(ParseError) with line or field, Error(ValidationFailed) naming
/// the violated identity, Error(InvalidInput) for a non-SPD metric. With
/// check_jacobi = false only antisymmetry consistency is enforced.
ParsedAlgebra parse_algebra(const std::string& text, const std::string& source = "<string>", bool check_jacobi = true);
ParsedAlgebra load_algebra(const std::string& path, bool check_jacobi = true);
std::string emit_algebra(const MetricLieAlgebra& M, const std::vector<std::string>& basis_labels = {});

Subspace parse_subspace(const std::string& text, const std::string& source = "<string>");
Subspace load_subspace(const std::string& path);
std::string emit_subspace(const Subspace& V);

std::pair<Subspace, Subspace> parse_lr(const std::string& text, const std::string& source = "<string>");
std::pair<Subspace, Subspace> load_lr(const std::string& path);

/// Whole file as a string; Error(InvalidInput) if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace solvmetry
