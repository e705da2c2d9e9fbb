#include "solvmetry/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace solvmetry {

std::vector<std::complex<double>> polynomial_roots(const QPoly& p_in) {
  QPoly p = p_in;
  poly_trim(p);
  const std::size_t deg = p.empty() ? 0 : p.size() - 1;
  if (deg == 0) return {};
  std::vector<std::complex<double>> roots;
  if (deg == 1) {
    roots.emplace_back(Rational(-p[0] / p[1]).get_d(), 0.0);
    return roots;
  }
  // Companion matrix of the monic polynomial.
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i)
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -Rational(p[i] / p[deg]).get_d();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  std::vector<std::complex<long double>> coeffs(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) coeffs[i] = static_cast<long double>(Rational(p[i] / p[deg]).get_d());
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    std::complex<long double> z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int iter = 0; iter < 8; ++iter) {
      std::complex<long double> f = coeffs[deg];
      std::complex<long double> df = 0;
      for (std::size_t k = deg; k-- > 0;) {
        df = df * z + f;
        f = f * z + coeffs[k];
      }
      if (std::abs(df) == 0) break;
      const auto step = f / df;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  // Conjugate pairs from a real polynomial: clean purely real roots.
  for (auto& r : roots)
    if (std::abs(r.imag()) < 1e-14 * std::max(1.0, std::abs(r.real()))) r = {r.real(), 0.0};
  return roots;
}

std::vector<SpectralCluster> exact_spectrum(const QMat& a) {
  std::vector<SpectralCluster> out;
  const auto factors = squarefree_factorization(charpoly(a));
  for (std::size_t m = 0; m < factors.size(); ++m)
    for (const auto& r : polynomial_roots(factors[m])) out.push_back({r, m + 1});
  std::sort(out.begin(), out.end(), [](const SpectralCluster& x, const SpectralCluster& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return out;
}

bool is_diagonalizable(const QMat& a) {
  // Over C: diagonalizable iff the square-free part of the characteristic
  // polynomial annihilates the matrix.
  const QPoly p = charpoly(a);
  QPoly radical = poly_exact_div(p, poly_gcd(p, poly_derivative(p)));
  return poly_eval(radical, a).is_zero();
}

}  // namespace solvmetry
