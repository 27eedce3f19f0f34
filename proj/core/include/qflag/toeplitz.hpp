#pragma once

#include <vector>

#include "qflag/linalg.hpp"
#include "qflag/poly.hpp"

namespace qflag::toeplitz {

using poly::Rational;

// Unipotent lower-triangular Toeplitz matrix with entries x_{ij} = a_{i-j},
// a_0 = 1. Instantiated for Rational (exact mode) and double.
template <class T>
struct Point {
  int n = 0;
  std::vector<T> a;  // a_1 .. a_{n-1}

  static Point identity(int n) { return Point{n, std::vector<T>(n - 1, T(0))}; }
  // a_l with a_0 = 1 and a_l = 0 outside 0..n-1.
  T coeff(int l) const {
    if (l == 0) return T(1);
    if (l < 0 || l >= n) return T(0);
    return a[l - 1];
  }
  bool operator==(const Point&) const = default;
};

using ExactPoint = Point<Rational>;
using FloatPoint = Point<double>;

FloatPoint to_float(const ExactPoint& x);

template <class T>
linalg::Matrix<T> matrix(const Point<T>& x);

// Delta_0 .. Delta_n; Delta_m is the lower-left (n-m)x(n-m) corner minor and
// Delta_0 = Delta_n = 1.
template <class T>
std::vector<T> deltas(const Point<T>& x);

// Minor of an n x n matrix with 1-based row and column lists.
template <class T>
T minor(const linalg::Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols);

struct Stratum {
  std::vector<int> ip;         // indices with Delta_i != 0
  // Floating mode: nonzero Delta_i within the tolerance, counted as zero.
  // Floating tolerances are relative to the Hadamard bound of each minor.
  std::vector<int> ambiguous;
};

Stratum stratum(const ExactPoint& x);
Stratum stratum(const FloatPoint& x, double tol = 1e-10);

struct TnnReport {
  bool tnn = false;
  double margin = 0;  // smallest minor (floating: smallest relative to its Hadamard bound)
  std::vector<int> witness_rows, witness_cols;  // a minor attaining the margin
};

// All minors of every size; n <= 8.
TnnReport tnn_report(const ExactPoint& x);
TnnReport tnn_report(const FloatPoint& x, double tol = 1e-10);
bool is_tnn(const ExactPoint& x);
bool is_tnn(const FloatPoint& x, double tol = 1e-10);
// Delta_j > 0 for all j and every d x d minor with column set {1..d} positive.
bool is_tp_cell(const ExactPoint& x);
bool is_tp_cell(const FloatPoint& x, double tol = 1e-10);

// a_i = e_i of the roots z exp(2 pi i m_j / n); requires a conjugation-closed root set.
FloatPoint grassmannian_point(int d, int n, double z, const std::vector<int>& m);
// Roots t zeta^{-(d-1)/2 + j}, j = 0..d-1, zeta = exp(2 pi i / n).
FloatPoint positive_curve(int d, int n, double t);

template <class T>
Point<T> semigroup_mul(const Point<T>& x, const Point<T>& y);
template <class T>
Point<T> scale_path(const Point<T>& x, const T& t);

}  // namespace qflag::toeplitz
