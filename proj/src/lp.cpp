#include "solvmetry/lp.hpp"

#include "solvmetry/errors.hpp"

#include <cmath>
#include <limits>

namespace solvmetry {

LpResult simplex_max(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                     const std::vector<double>& c, std::size_t max_iterations) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  constexpr double eps = 1e-12;
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "simplex: constraint row has wrong length");
    if (b[i] < 0) throw Error(ErrorKind::LpFailure, "simplex: negative right-hand side");
  }
  // Tableau columns: n structural, m slack, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  LpResult out;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (t[m][j] < -eps) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= eps) continue;
      const double ratio = t[i][width - 1] / t[i][enter];
      if (ratio < best - eps || (std::abs(ratio - best) <= eps && leave < m && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) {
      out.optimal = false;
      out.iterations++;
      return out;
    }
    if (++out.iterations > max_iterations) throw Error(ErrorKind::LpFailure, "simplex: iteration cap exceeded");
    const double piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0.0) continue;
      const double f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  out.optimal = true;
  out.value = t[m][width - 1];
  out.y.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) out.y[basis[i]] = t[i][width - 1];
  return out;
}

}  // namespace solvmetry
