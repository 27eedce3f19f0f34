#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <type_traits>
#include <vector>

#include "qflag/errors.hpp"

namespace qflag::linalg {

// Row-major dense matrix, 0-based indexing.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix operator+(const Matrix& o) const { Matrix r(*this); return r += o; }
  Matrix operator-(const Matrix& o) const { Matrix r(*this); return r -= o; }
  Matrix scaled(const T& c) const {
    Matrix r(*this);
    for (auto& v : r.data_) v *= c;
    return r;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> r(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  // Rows and columns given as 0-based index lists.
  Matrix sub(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Matrix r(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) r(i, j) = (*this)(rs[i], cs[j]);
    return r;
  }
  bool operator==(const Matrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

// Pivot row for column c among rows r..: largest magnitude for floating
// types, first nonzero for exact types. -1 when the column is zero.
template <class T>
int pivot_row(const Matrix<T>& m, int r, int c) {
  if constexpr (std::is_floating_point_v<T>) {
    int best = -1;
    T bv = 0;
    for (int i = r; i < m.rows(); ++i)
      if (std::abs(m(i, c)) > bv) {
        bv = std::abs(m(i, c));
        best = i;
      }
    return best;
  } else {
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) return i;
    return -1;
  }
}

template <class T>
void swap_rows(Matrix<T>& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

template <class T>
T determinant(Matrix<T> m) {
  const int n = m.rows();
  T det = 1;
  for (int c = 0; c < n; ++c) {
    int p = detail::pivot_row(m, c, c);
    if (p < 0) return T(0);
    if (p != c) {
      detail::swap_rows(m, p, c);
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      T f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<int> rref(Matrix<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = detail::pivot_row(m, r, c);
    if (p < 0) continue;
    if constexpr (std::is_floating_point_v<T>) {
      if (std::abs(m(p, c)) < 1e-14) continue;
    }
    detail::swap_rows(m, p, r);
    T inv = T(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      T f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref(m).size());
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  const int n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Unique solution of a x = b for square nonsingular a.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  const int n = a.rows();
  Matrix<T> aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  std::vector<T> x(n);
  for (int i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

// Determinant over any commutative ring by expansion over column subsets;
// O(2^n n) ring operations, no division.
template <class T>
T expansion_determinant(const std::vector<std::vector<T>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return T(1);
  std::vector<T> dp(std::size_t(1) << n, T(0));
  dp[0] = T(1);
  for (unsigned s = 0; s < dp.size(); ++s) {
    if (dp[s] == T(0)) continue;
    const int row = __builtin_popcount(s);
    if (row == n) continue;
    for (int c = 0; c < n; ++c) {
      if (s & (1u << c)) continue;
      if (m[row][c] == T(0)) continue;
      // Sign from the number of already-used columns to the right of c.
      const int above = __builtin_popcount(s >> (c + 1));
      T term = dp[s] * m[row][c];
      if (above % 2) dp[s | (1u << c)] -= term;
      else dp[s | (1u << c)] += term;
    }
  }
  return dp.back();
}

inline Matrix<double> to_double(const Matrix<mpq_class>& m) {
  Matrix<double> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

}  // namespace qflag::linalg
