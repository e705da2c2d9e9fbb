#pragma once

// Eigenvalues of exact rational matrices. Multiplicities come from an exact
// square-free factorization of the characteristic polynomial, so the roots
// handed to the floating-point solver are simple and well conditioned.

#include "solvmetry/rational.hpp"

#include <complex>
#include <vector>

namespace solvmetry {

struct SpectralCluster {
  std::complex<double> value;
  std::size_t multiplicity = 0;
};

/// Distinct eigenvalues with algebraic multiplicities, sorted by (real, imag).
std::vector<SpectralCluster> exact_spectrum(const QMat& a);

/// Roots of a square-free rational polynomial, Newton-polished.
std::vector<std::complex<double>> polynomial_roots(const QPoly& p);

/// Minimal polynomial has no repeated factor, decided exactly.
bool is_diagonalizable(const QMat& a);

}  // namespace solvmetry
