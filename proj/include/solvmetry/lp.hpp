#pragma once

// Dense tableau simplex for small linear programs of the form
//   maximize c.y  subject to  A y <= b,  y >= 0,  with b >= 0,
// so the origin is a feasible starting vertex and no phase one is needed.

#include <cstddef>
#include <vector>

namespace solvmetry {

struct LpResult {
  bool optimal = false;  // false means unbounded
  double value = 0.0;
  std::vector<double> y;
  std::size_t iterations = 0;
};

/// Bland's rule pivoting. Throws Error(LpFailure) if b has a negative entry
/// or the iteration cap is exceeded.
LpResult simplex_max(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                     const std::vector<double>& c, std::size_t max_iterations = 10000);

}  // namespace solvmetry
