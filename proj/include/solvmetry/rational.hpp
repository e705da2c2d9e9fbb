#pragma once

// Exact rational vectors and matrices, plus the handful of linear-algebra
// kernels (row reduction, kernels, solves, characteristic polynomials) that
// every other module is built on.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace solvmetry {

using Rational = mpq_class;
using QVec = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols);

  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<QVec>& rows, std::size_t cols);
  static QMat from_columns(const std::vector<QVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVec row(std::size_t i) const;
  QVec col(std::size_t j) const;
  void set_col(std::size_t j, const QVec& v);

  QMat transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const QMat& a, const QMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);
QMat operator*(const QMat& a, const QMat& b);
QMat operator*(const Rational& s, const QMat& a);
QVec operator*(const QMat& a, const QVec& x);

QMat commutator(const QMat& a, const QMat& b);
Rational trace(const QMat& a);
QMat power(const QMat& a, std::size_t k);

QVec zero_vector(std::size_t n);
QVec unit_vector(std::size_t n, std::size_t i);
QVec vadd(const QVec& a, const QVec& b);
QVec vsub(const QVec& a, const QVec& b);
QVec vscale(const Rational& s, const QVec& a);
/// a + s*b
QVec vaxpy(const QVec& a, const Rational& s, const QVec& b);
Rational vdot(const QVec& a, const QVec& b);
bool is_zero(const QVec& v);

struct RowEchelon {
  QMat reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots are the leading column of each nonzero row.
RowEchelon rref(QMat a);
std::size_t rank(const QMat& a);

/// Canonical basis of {x : a x = 0}, one vector per free column.
std::vector<QVec> nullspace(const QMat& a);

/// Some solution of a x = b, or nullopt when inconsistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

std::optional<QMat> inverse(const QMat& a);
Rational determinant(QMat a);

/// Nonzero rows of the RREF of the span of `vecs` (all of length n).
std::vector<QVec> canonical_basis(const std::vector<QVec>& vecs, std::size_t n);

/// Coefficients low degree first: p(t) = sum p[i] t^i.
using QPoly = std::vector<Rational>;

QPoly charpoly(const QMat& a);
QPoly poly_derivative(const QPoly& p);
QPoly poly_gcd(QPoly a, QPoly b);
/// Quotient of exact division; throws if the remainder is nonzero.
QPoly poly_exact_div(const QPoly& a, const QPoly& b);
std::size_t poly_degree(const QPoly& p);
void poly_trim(QPoly& p);
QMat poly_eval(const QPoly& p, const QMat& a);

/// Square-free factorization (Yun): result[m-1] is the product of the
/// irreducible factors appearing with multiplicity exactly m, made monic.
std::vector<QPoly> squarefree_factorization(const QPoly& p);

std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace solvmetry
