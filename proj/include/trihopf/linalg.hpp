#pragma once

// Dense exact linear algebra over CycScalar.

#include <optional>
#include <span>
#include <vector>

#include "trihopf/errors.hpp"
#include "trihopf/scalars.hpp"

namespace trihopf {

/// Coordinates of an element in a fixed basis.
using Vec = std::vector<CycScalar>;

inline Vec basis_vector(int dim, int index) {
  Vec v(dim);
  v[index] = 1;
  return v;
}

inline bool is_zero(std::span<const CycScalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec scaled(Vec v, const CycScalar& s) {
  for (auto& x : v) x *= s;
  return v;
}

inline Vec add(Vec a, std::span<const CycScalar> b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix shape");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors (each of length rows).
  static Mat from_columns(int rows, std::span<const Vec> cols) {
    Mat m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      if (static_cast<int>(cols[j].size()) != rows) throw ShapeError("column length mismatch");
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Mat from_rows(int cols, std::span<const Vec> rows) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != cols) throw ShapeError("row length mismatch");
      for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  CycScalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const CycScalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vec row(int i) const { return Vec(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(std::span<const CycScalar> v) const {
    if (static_cast<int>(v.size()) != cols_) throw ShapeError("matrix-vector shape mismatch");
    Vec out(rows_);
    for (int j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (int i = 0; i < rows_; ++i) {
        const auto& m = (*this)(i, j);
        if (!m.is_zero()) out[i] += m * v[j];
      }
    }
    return out;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const auto& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }

  friend Mat operator+(Mat a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }

  friend bool operator==(const Mat& a, const Mat& b) = default;

  bool is_zero() const { return trihopf::is_zero(a_); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<CycScalar> a_;
};

namespace detail {

/// Row echelon form by fraction-free (Bareiss) elimination. Returns pivot
/// columns; the matrix is overwritten with its echelon form. Extra columns
/// past `elim_cols` are carried along but never chosen as pivots.
inline std::vector<int> bareiss_echelon(Mat& a, int elim_cols) {
  std::vector<int> pivots;
  CycScalar prev = 1;
  int r = 0;
  for (int c = 0; c < elim_cols && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const CycScalar piv = a(r, c);
    const CycScalar prev_inv = prev.inverse();
    for (int i = r + 1; i < a.rows(); ++i) {
      const CycScalar f = a(i, c);
      for (int j = c + 1; j < a.cols(); ++j) {
        CycScalar v = piv * a(i, j);
        if (!f.is_zero()) v -= f * a(r, j);
        a(i, j) = prev.is_one() ? v : v * prev_inv;
      }
      a(i, c) = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Exact rank.
inline int mat_rank(Mat m) { return static_cast<int>(detail::bareiss_echelon(m, m.cols()).size()); }

/// Basis of the null space. Vector k has a 1 in the k-th free column and
/// zeros in the other free columns, so the basis does not depend on the
/// elimination path.
inline std::vector<Vec> mat_kernel(Mat m) {
  const int n = m.cols();
  const auto pivots = detail::bareiss_echelon(m, n);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n);
    x[f] = 1;
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      const int pc = pivots[r];
      CycScalar s = 0;
      for (int j = pc + 1; j < n; ++j)
        if (!x[j].is_zero() && !m(r, j).is_zero()) s += m(r, j) * x[j];
      x[pc] = s.is_zero() ? CycScalar(0) : -s / m(r, pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vec> mat_solve(const Mat& m, std::span<const CycScalar> b) {
  if (static_cast<int>(b.size()) != m.rows()) throw ShapeError("right-hand side length mismatch");
  const int n = m.cols();
  Mat aug(m.rows(), n + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = detail::bareiss_echelon(aug, n);
  for (int i = static_cast<int>(pivots.size()); i < m.rows(); ++i)
    if (!aug(i, n).is_zero()) return std::nullopt;
  Vec x(n);
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    const int pc = pivots[r];
    CycScalar s = aug(r, n);
    for (int j = pc + 1; j < n; ++j)
      if (!x[j].is_zero() && !aug(r, j).is_zero()) s -= aug(r, j) * x[j];
    x[pc] = s.is_zero() ? CycScalar(0) : s / aug(r, pc);
  }
  return x;
}

inline bool in_span(std::span<const Vec> basis, std::span<const CycScalar> v) {
  if (trihopf::is_zero(v)) return true;
  if (basis.empty()) return false;
  return mat_solve(Mat::from_columns(static_cast<int>(v.size()), basis), v).has_value();
}

inline Mat mat_inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const int n = m.rows();
  Mat inv(n, n);
  for (int j = 0; j < n; ++j) {
    const auto col = mat_solve(m, basis_vector(n, j));
    if (!col) throw NotInvertible("singular matrix");
    for (int i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  return inv;
}

}  // namespace trihopf
