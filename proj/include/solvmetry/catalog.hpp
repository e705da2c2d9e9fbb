#pragma once

// Named example algebras with fixed basis conventions.
//
// Names: heisenberg3, aff1, hyperbolic:<n> (alias hyperbolic3), oscillator4,
// nilpotent5, h2xR, diag_solv:<w1>,<w2>,..., spiral3, abelian:<n>, aff1_std4,
// aff1xh3, and the non-solvable sl2, so3, sl2_plus_R2.

#include "solvmetry/metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace solvmetry {

struct CatalogEntry {
  std::string name;
  MetricLieAlgebra algebra;
  std::vector<std::string> basis_labels;
  /// Hand-computed nilradical; absent for non-solvable entries.
  std::optional<Subspace> expected_nilradical;
  /// Skew derivation stored with the entry (nilpotent5 only).
  std::optional<QMat> expected_skew_derivation;
  std::string description;
};

/// Throws Error(UnknownCatalogEntry) listing the available names.
CatalogEntry catalog_entry(const std::string& name);
MetricLieAlgebra catalog(const std::string& name);

/// One default instance per entry, in a fixed order.
std::vector<std::string> catalog_names();
/// The solvable subset of catalog_names().
std::vector<std::string> solvable_catalog_names();

}  // namespace solvmetry
