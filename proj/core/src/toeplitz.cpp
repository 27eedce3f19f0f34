#include "qflag/toeplitz.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "qflag/errors.hpp"

namespace qflag::toeplitz {

namespace {

// Rows and columns of the corner minor Delta_k.
std::vector<int> corner_rows(int n, int k) {
  std::vector<int> r;
  for (int i = k + 1; i <= n; ++i) r.push_back(i);
  return r;
}
std::vector<int> corner_cols(int n, int k) {
  std::vector<int> c;
  for (int j = 1; j <= n - k; ++j) c.push_back(j);
  return c;
}

double as_double(const Rational& r) { return r.get_d(); }
double as_double(double v) { return v; }

template <class T>
void check_size(const Point<T>& x) {
  if (x.n < 1 || static_cast<int>(x.a.size()) != x.n - 1)
    throw ValidationError("Toeplitz point needs n-1 entries");
}

// Enumerates k-subsets of {1..n} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  while (true) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

// Product of the row norms of a submatrix, an upper bound for its determinant.
// Floating tolerances are taken relative to it.
double hadamard_bound(const linalg::Matrix<double>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  double b = 1;
  for (int r : rows) {
    double s = 0;
    for (int c : cols) s += m(r - 1, c - 1) * m(r - 1, c - 1);
    b *= std::sqrt(s);
  }
  return b;
}

// Whether a computed minor is indistinguishable from zero or negative.
template <class T>
bool at_most_zero(const T& v, const linalg::Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols,
                  double tol) {
  if constexpr (std::is_floating_point_v<T>) return v <= tol * hadamard_bound(m, rows, cols);
  else return v <= 0;
}

template <class T>
TnnReport tnn_impl(const Point<T>& x, double tol) {
  check_size(x);
  if (x.n > 8) throw ValidationError("exhaustive minor test is limited to n <= 8");
  const auto m = matrix(x);
  TnnReport rep;
  rep.tnn = true;
  bool first = true;
  T worst = T(0);
  double worst_scaled = 0;
  for (int k = 1; k <= x.n; ++k)
    for_each_subset(x.n, k, [&](const std::vector<int>& rows) {
      // A minor of a lower unitriangular matrix vanishes unless rows dominate columns.
      for_each_subset(x.n, k, [&](const std::vector<int>& cols) {
        for (int i = 0; i < k; ++i)
          if (rows[i] < cols[i]) return;
        T v = minor(m, rows, cols);
        double scaled = as_double(v);
        if constexpr (std::is_floating_point_v<T>) {
          const double b = hadamard_bound(m, rows, cols);
          scaled = b > 0 ? v / b : 0.0;
        }
        if (first || scaled < worst_scaled) {
          worst = v;
          worst_scaled = scaled;
          first = false;
          rep.witness_rows = rows;
          rep.witness_cols = cols;
        }
      });
    });
  rep.margin = as_double(worst);
  if constexpr (std::is_floating_point_v<T>) rep.tnn = worst_scaled >= -tol;
  else rep.tnn = worst >= 0;
  return rep;
}

template <class T>
bool tp_cell_impl(const Point<T>& x, double tol) {
  check_size(x);
  const auto m = matrix(x);
  const auto d = deltas(x);
  for (int j = 1; j < x.n; ++j)
    if (at_most_zero(d[j], m, corner_rows(x.n, j), corner_cols(x.n, j), tol)) return false;
  for (int k = 1; k <= x.n; ++k) {
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i + 1;
    bool ok = true;
    for_each_subset(x.n, k, [&](const std::vector<int>& rows) {
      for (int i = 0; i < k; ++i)
        if (rows[i] < cols[i]) return;  // structurally zero
      if (at_most_zero(minor(m, rows, cols), m, rows, cols, tol)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

FloatPoint to_float(const ExactPoint& x) {
  FloatPoint r{x.n, {}};
  for (auto& v : x.a) r.a.push_back(v.get_d());
  return r;
}

template <class T>
linalg::Matrix<T> matrix(const Point<T>& x) {
  check_size(x);
  linalg::Matrix<T> m(x.n, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j <= i; ++j) m(i, j) = x.coeff(i - j);
  return m;
}

template <class T>
T minor(const linalg::Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> r, c;
  for (int v : rows) r.push_back(v - 1);
  for (int v : cols) c.push_back(v - 1);
  return linalg::determinant(m.sub(r, c));
}

template <class T>
std::vector<T> deltas(const Point<T>& x) {
  const auto m = matrix(x);
  std::vector<T> d(x.n + 1, T(1));
  for (int k = 1; k < x.n; ++k) d[k] = minor(m, corner_rows(x.n, k), corner_cols(x.n, k));
  return d;
}

Stratum stratum(const ExactPoint& x) {
  Stratum s;
  const auto d = deltas(x);
  for (int i = 1; i < x.n; ++i)
    if (d[i] != 0) s.ip.push_back(i);
  return s;
}

Stratum stratum(const FloatPoint& x, double tol) {
  Stratum s;
  const auto m = matrix(x);
  const auto d = deltas(x);
  for (int i = 1; i < x.n; ++i) {
    if (std::abs(d[i]) > tol * hadamard_bound(m, corner_rows(x.n, i), corner_cols(x.n, i))) s.ip.push_back(i);
    else if (d[i] != 0) s.ambiguous.push_back(i);
  }
  return s;
}

TnnReport tnn_report(const ExactPoint& x) { return tnn_impl(x, 0); }
TnnReport tnn_report(const FloatPoint& x, double tol) { return tnn_impl(x, tol); }
bool is_tnn(const ExactPoint& x) { return tnn_report(x).tnn; }
bool is_tnn(const FloatPoint& x, double tol) { return tnn_report(x, tol).tnn; }
bool is_tp_cell(const ExactPoint& x) { return tp_cell_impl(x, 0); }
bool is_tp_cell(const FloatPoint& x, double tol) { return tp_cell_impl(x, tol); }

namespace {

FloatPoint from_roots(int d, int n, const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> e(d + 1, 0.0);
  e[0] = 1.0;
  for (auto& r : roots)
    for (int i = d; i >= 1; --i) e[i] += e[i - 1] * r;
  FloatPoint x = FloatPoint::identity(n);
  for (int i = 1; i <= std::min(d, n - 1); ++i) {
    const double scale = std::max(1.0, std::abs(e[i]));
    if (std::abs(e[i].imag()) > 1e-9 * scale) throw ValidationError("root set is not closed under conjugation");
    x.a[i - 1] = e[i].real();
  }
  return x;
}

}  // namespace

FloatPoint grassmannian_point(int d, int n, double z, const std::vector<int>& m) {
  if (d < 1 || d >= n || static_cast<int>(m.size()) != d) throw ValidationError("grassmannian_point: need d exponents, 1 <= d < n");
  for (int j = 0; j < d; ++j)
    if (m[j] < 0 || m[j] >= n || (j > 0 && m[j] <= m[j - 1])) throw ValidationError("exponents must satisfy 0 <= m_1 < ... < m_d < n");
  std::vector<std::complex<double>> roots;
  for (int v : m) roots.push_back(z * std::polar(1.0, 2 * std::numbers::pi * v / n));
  return from_roots(d, n, roots);
}

FloatPoint positive_curve(int d, int n, double t) {
  if (d < 1 || d >= n) throw ValidationError("positive_curve: need 1 <= d < n");
  if (t < 0) throw ValidationError("positive_curve: t must be nonnegative");
  std::vector<std::complex<double>> roots;
  for (int j = 0; j < d; ++j) roots.push_back(t * std::polar(1.0, 2 * std::numbers::pi * (-(d - 1) / 2.0 + j) / n));
  return from_roots(d, n, roots);
}

template <class T>
Point<T> semigroup_mul(const Point<T>& x, const Point<T>& y) {
  if (x.n != y.n) throw ValidationError("semigroup_mul: sizes differ");
  Point<T> r = Point<T>::identity(x.n);
  for (int l = 1; l < x.n; ++l) {
    T s = T(0);
    for (int i = 0; i <= l; ++i) s += x.coeff(i) * y.coeff(l - i);
    r.a[l - 1] = s;
  }
  return r;
}

template <class T>
Point<T> scale_path(const Point<T>& x, const T& t) {
  Point<T> r = x;
  T p = t;
  for (auto& v : r.a) {
    v *= p;
    p *= t;
  }
  return r;
}

template linalg::Matrix<Rational> matrix(const ExactPoint&);
template linalg::Matrix<double> matrix(const FloatPoint&);
template std::vector<Rational> deltas(const ExactPoint&);
template std::vector<double> deltas(const FloatPoint&);
template Rational minor(const linalg::Matrix<Rational>&, const std::vector<int>&, const std::vector<int>&);
template double minor(const linalg::Matrix<double>&, const std::vector<int>&, const std::vector<int>&);
template ExactPoint semigroup_mul(const ExactPoint&, const ExactPoint&);
template FloatPoint semigroup_mul(const FloatPoint&, const FloatPoint&);
template ExactPoint scale_path(const ExactPoint&, const Rational&);
template FloatPoint scale_path(const FloatPoint&, const double&);

}  // namespace qflag::toeplitz
