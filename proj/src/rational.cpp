#include "solvmetry/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace solvmetry {

QMat::QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  QMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("QMat::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::from_columns(const std::vector<QVec>& cols, std::size_t rows) {
  QMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

QVec QMat::row(std::size_t i) const {
  return QVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVec QMat::col(std::size_t j) const {
  QVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void QMat::set_col(std::size_t j, const QVec& v) {
  if (v.size() != rows_) throw std::invalid_argument("QMat::set_col: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("QMat +: shape mismatch");
  QMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

QMat operator-(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("QMat -: shape mismatch");
  QMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("QMat *: shape mismatch");
  QMat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

QMat operator*(const Rational& s, const QMat& a) {
  QMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

QVec operator*(const QMat& a, const QVec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("QMat * QVec: shape mismatch");
  QVec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(x[j]) != 0) r[i] += a(i, j) * x[j];
  return r;
}

QMat commutator(const QMat& a, const QMat& b) { return a * b - b * a; }

Rational trace(const QMat& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

QMat power(const QMat& a, std::size_t k) {
  QMat r = QMat::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

QVec zero_vector(std::size_t n) { return QVec(n); }

QVec unit_vector(std::size_t n, std::size_t i) {
  QVec v(n);
  v.at(i) = 1;
  return v;
}

QVec vadd(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vadd: length mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vsub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vsub: length mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vscale(const Rational& s, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

QVec vaxpy(const QVec& a, const Rational& s, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vaxpy: length mismatch");
  QVec r(a);
  if (sgn(s) == 0) return r;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += s * b[i];
  return r;
}

Rational vdot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vdot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RowEchelon rref(QMat a) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead_row, j));
    const Rational inv = 1 / a(lead_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead_row || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(lead_row, j);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const QMat& a) { return rref(a).pivots.size(); }

std::vector<QVec> nullspace(const QMat& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVec v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  QVec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::optional<QMat> inverse(const QMat& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rational determinant(QMat a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::vector<QVec> canonical_basis(const std::vector<QVec>& vecs, std::size_t n) {
  if (vecs.empty()) return {};
  const RowEchelon e = rref(QMat::from_rows(vecs, n));
  std::vector<QVec> out;
  out.reserve(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

void poly_trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::size_t poly_degree(const QPoly& p) {
  QPoly q = p;
  poly_trim(q);
  return q.empty() ? 0 : q.size() - 1;
}

QPoly charpoly(const QMat& a) {
  // Faddeev-LeVerrier: exact over Q since the divisions are by integers.
  if (!a.is_square()) throw std::invalid_argument("charpoly: matrix not square");
  const std::size_t n = a.rows();
  QPoly c(n + 1);
  c[n] = 1;
  QMat m(n, n);
  const QMat id = QMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -trace(a * m) / Rational(static_cast<long>(k));
  }
  return c;
}

QPoly poly_derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(static_cast<long>(i));
  poly_trim(d);
  return d;
}

namespace {

std::pair<QPoly, QPoly> poly_divmod(QPoly a, QPoly b) {
  poly_trim(a);
  poly_trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    poly_trim(a);
  }
  poly_trim(q);
  return {q, a};
}

void make_monic(QPoly& p) {
  poly_trim(p);
  if (p.empty()) return;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

}  // namespace

QPoly poly_gcd(QPoly a, QPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

QPoly poly_exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.empty()) throw std::domain_error("poly_exact_div: nonzero remainder");
  return q;
}

QMat poly_eval(const QPoly& p, const QMat& a) {
  QMat r(a.rows(), a.cols());
  for (std::size_t i = p.size(); i-- > 0;) {
    r = r * a;
    for (std::size_t d = 0; d < a.rows(); ++d) r(d, d) += p[i];
  }
  return r;
}

std::vector<QPoly> squarefree_factorization(const QPoly& p_in) {
  QPoly p = p_in;
  make_monic(p);
  std::vector<QPoly> out;
  if (p.size() <= 1) return out;
  QPoly a0 = poly_gcd(p, poly_derivative(p));
  QPoly b = poly_exact_div(p, a0);
  QPoly c = poly_exact_div(poly_derivative(p), a0);
  QPoly d = c;
  {
    const QPoly bd = poly_derivative(b);
    d.resize(std::max(c.size(), bd.size()));
    for (std::size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
    poly_trim(d);
  }
  while (poly_degree(b) > 0) {
    QPoly a = poly_gcd(b, d);
    b = poly_exact_div(b, a);
    c = poly_exact_div(d, a);
    const QPoly bd = poly_derivative(b);
    d = c;
    d.resize(std::max(c.size(), bd.size()));
    for (std::size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
    poly_trim(d);
    make_monic(a);
    out.push_back(std::move(a));
  }
  while (!out.empty() && poly_degree(out.back()) == 0) out.pop_back();
  return out;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return std::invalid_argument("not a rational literal: \"" + s + "\""); };
  if (s.empty()) throw bad();
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (; i < s.size(); ++i) {
    const char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else if (ch == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw bad();
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) throw bad();
  std::string clean = s[0] == '+' ? s.substr(1) : s;
  Rational q;
  if (q.set_str(clean, 10) != 0) throw bad();
  if (seen_slash && sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

}  // namespace solvmetry
