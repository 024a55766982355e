#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace hecke0 {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

inline std::string rational_str(Rational const& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string const& s) {
  try {
    Rational q(s);
    q.canonicalize();
    if (q.get_den() == 0) throw invalid_input("zero denominator");
    return q;
  } catch (std::invalid_argument const&) {
    throw invalid_input("not a rational number: '" + s + "'");
  }
}

inline bool is_zero(Vector const& v) {
  for (auto const& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

/// Dense matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(std::vector<Vector> const& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Rational const& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vector column(int j) const {
    Vector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vector row(int i) const { return Vector(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Skips zero entries of the left factor, which keeps products of sparse action matrices cheap.
  friend Matrix operator*(Matrix const& x, Matrix const& y) {
    if (x.cols_ != y.rows_) throw invalid_input("matrix dimension mismatch");
    Matrix z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        Rational const& a = x(i, k);
        if (sgn(a) == 0) continue;
        for (int j = 0; j < y.cols_; ++j)
          if (sgn(y(k, j)) != 0) z(i, j) += a * y(k, j);
      }
    return z;
  }

  friend Vector operator*(Matrix const& x, Vector const& v) {
    if (x.cols_ != static_cast<int>(v.size())) throw invalid_input("matrix-vector dimension mismatch");
    Vector out(x.rows_);
    for (int k = 0; k < x.cols_; ++k) {
      if (sgn(v[k]) == 0) continue;
      for (int i = 0; i < x.rows_; ++i)
        if (sgn(x(i, k)) != 0) out[i] += x(i, k) * v[k];
    }
    return out;
  }

  friend Matrix operator+(Matrix x, Matrix const& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw invalid_input("matrix dimension mismatch");
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }
  friend Matrix operator-(Matrix x, Matrix const& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw invalid_input("matrix dimension mismatch");
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
    return x;
  }
  friend Matrix operator*(Rational const& c, Matrix x) {
    for (auto& e : x.a_) e *= c;
    return x;
  }

  bool is_zero() const {
    for (auto const& e : a_)
      if (sgn(e) != 0) return false;
    return true;
  }

  friend bool operator==(Matrix const& x, Matrix const& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

/// Row space kept in reduced row echelon form; grows one vector at a time.
class Echelon {
 public:
  explicit Echelon(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<Vector> const& basis() const { return rows_; }
  std::vector<int> const& pivots() const { return pivots_; }

  Vector reduce(Vector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Rational c = v[pivots_[k]];
      if (sgn(c) == 0) continue;
      auto const& r = rows_[k];
      for (int j = pivots_[k]; j < dim_; ++j)
        if (sgn(r[j]) != 0) v[j] -= c * r[j];
    }
    return v;
  }

  bool contains(Vector const& v) const { return is_zero(reduce(v)); }

  /// Returns true when v was independent of the current span.
  bool add(Vector v) {
    if (static_cast<int>(v.size()) != dim_) throw invalid_input("vector dimension mismatch");
    v = reduce(std::move(v));
    int p = 0;
    while (p < dim_ && sgn(v[p]) == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / v[p];
    for (int j = p; j < dim_; ++j)
      if (sgn(v[j]) != 0) v[j] *= inv;
    for (auto& r : rows_) {
      Rational c = r[p];
      if (sgn(c) == 0) continue;
      for (int j = p; j < dim_; ++j)
        if (sgn(v[j]) != 0) r[j] -= c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool full() const { return rank() == dim_; }

 private:
  int dim_;
  std::vector<Vector> rows_;
  std::vector<int> pivots_;
};

inline int rank(Matrix const& m) {
  Echelon e(m.cols());
  for (int i = 0; i < m.rows() && !e.full(); ++i) e.add(m.row(i));
  return e.rank();
}

/// Basis of {x : m x = 0}.
inline std::vector<Vector> nullspace(Matrix const& m) {
  Echelon e(m.cols());
  for (int i = 0; i < m.rows() && !e.full(); ++i) e.add(m.row(i));
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots()) is_pivot[p] = true;
  std::vector<Vector> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < e.pivots().size(); ++k) x[e.pivots()[k]] = -e.basis()[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

/// Some x with m x = b, if any.
inline std::optional<Vector> solve(Matrix const& m, Vector const& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e(m.cols() + 1);
  for (int i = 0; i < aug.rows(); ++i) e.add(aug.row(i));
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivots().size(); ++k) {
    int p = e.pivots()[k];
    if (p == m.cols()) return std::nullopt;
    x[p] = e.basis()[k][m.cols()];
  }
  return x;
}

inline std::optional<Matrix> inverse(Matrix const& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Echelon e(2 * n);
  for (int i = 0; i < n; ++i) {
    Vector r(2 * n);
    for (int j = 0; j < n; ++j) r[j] = m(i, j);
    r[n + i] = 1;
    e.add(r);
  }
  if (e.rank() < n || e.pivots()[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) inv(e.pivots()[k], j) = e.basis()[k][n + j];
  return inv;
}

inline Rational trace(Matrix const& m) {
  Rational t = 0;
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

}  // namespace hecke0
