#include "qflag/peterson.hpp"

#include <algorithm>
#include <cmath>

#include "qflag/errors.hpp"
#include "qflag/qcoh.hpp"

namespace qflag::peterson {

namespace {

double magnitude(const Rational& r) { return std::abs(r.get_d()); }
double magnitude(double v) { return std::abs(v); }

template <class T>
T power(const T& v, int e) {
  T r = T(1);
  for (int i = 0; i < e; ++i) r *= v;
  return r;
}

template <class T>
bool is_zero(const T& v) {
  if constexpr (std::is_floating_point_v<T>) return v == 0.0;
  else return v == 0;
}

}  // namespace

template <class T>
linalg::Matrix<T> permutation_matrix(const Permutation& w) {
  const int n = w.size();
  linalg::Matrix<T> m(n, n);
  for (int j = 1; j <= n; ++j) m(w(j) - 1, j - 1) = T(1);
  return m;
}

template <class T>
linalg::Matrix<T> representative(const Point<T>& x) {
  return toeplitz::matrix(x) * permutation_matrix<T>(Permutation::longest(x.n));
}

template <class T>
T g_function(int m, int i, const linalg::Matrix<T>& g) {
  const int n = g.rows();
  if (m < 1 || m >= n) throw ValidationError("G^m_i needs 1 <= m < n");
  if (i < 0 || i > m) return T(0);
  std::vector<int> cols, den_rows, num_rows{m - i};
  for (int c = m; c < n; ++c) cols.push_back(c);
  for (int r = m; r < n; ++r) den_rows.push_back(r);
  for (int r = m + 1; r < n; ++r) num_rows.push_back(r);
  const T den = linalg::determinant(g.sub(den_rows, cols));
  if (is_zero(den))
    throw ValidationError("G^" + std::to_string(m) + "_i undefined: Delta_" + std::to_string(m) + " vanishes");
  return linalg::determinant(g.sub(num_rows, cols)) / den;
}

template <class T>
T g_function(int m, int i, const Point<T>& x) {
  return g_function(m, i, representative(x));
}

template <class T>
T CellCoordinates<T>::get(int j, int i) const {
  if (i == 0) return T(1);
  if (j < 1 || j > p.k() || i < 0 || i > p.nj(j)) return T(0);
  return G[j - 1][i - 1];
}

template <class T>
CellCoordinates<T> coordinates(const Point<T>& x, const ParabolicShape& p) {
  if (x.n != p.n()) throw ValidationError("point and shape sizes differ");
  const auto g = representative(x);
  CellCoordinates<T> c{p, {}};
  for (int j = 1; j <= p.k(); ++j) {
    std::vector<T> row;
    for (int i = 1; i <= p.nj(j); ++i) row.push_back(g_function(p.nj(j), i, g));
    c.G.push_back(std::move(row));
  }
  return c;
}

void require_stratum(const ExactPoint& x, const ParabolicShape& p) {
  auto s = toeplitz::stratum(x);
  if (x.n != p.n() || s.ip != p.ip()) throw ValidationError("point is not in the stratum of " + p.to_string());
}

void require_stratum(const FloatPoint& x, const ParabolicShape& p, double tol) {
  auto s = toeplitz::stratum(x, tol);
  if (x.n != p.n() || s.ip != p.ip()) throw ValidationError("point is not in the stratum of " + p.to_string());
}

template <class T>
std::vector<T> kostant_q(const Point<T>& x) {
  const auto d = toeplitz::deltas(x);
  std::vector<T> q;
  for (int j = 1; j < x.n; ++j) {
    if (is_zero(d[j])) throw ValidationError("Kostant formula needs Delta_" + std::to_string(j) + " != 0");
    q.push_back(d[j - 1] * d[j + 1] / (d[j] * d[j]));
  }
  return q;
}

template <class T>
std::vector<T> genkos_power(const Point<T>& x, const ParabolicShape& p) {
  const auto d = toeplitz::deltas(x);
  std::vector<T> r;
  for (int j = 1; j <= p.k(); ++j) {
    const int mj = p.block(j), mj1 = p.block(j + 1);
    const T& den = d[p.nj(j)];
    if (is_zero(den)) throw ValidationError("Delta_" + std::to_string(p.nj(j)) + " vanishes");
    r.push_back(power(d[p.nj(j - 1)], mj1) * power(d[p.nj(j + 1)], mj) / power(den, mj + mj1));
  }
  return r;
}

std::vector<double> q_values(const FloatPoint& x, const ParabolicShape& p, double tol) {
  require_stratum(x, p, tol);
  const auto r = genkos_power(x, p);
  std::vector<double> q;
  for (int j = 1; j <= p.k(); ++j) {
    const int e = p.block(j) * p.block(j + 1);
    const double v = r[j - 1];
    if (e == 1) {
      q.push_back(v);
    } else if (v < 0) {
      throw ValidationError("q_" + std::to_string(j) + " has no distinguished root: negative radicand");
    } else {
      q.push_back(std::pow(v, 1.0 / e));
    }
  }
  return q;
}

std::vector<Rational> q_values(const ExactPoint& x, const ParabolicShape& p) {
  require_stratum(x, p);
  const auto a = ask_conjugate(x, p);
  std::vector<Rational> q;
  for (int m = 1; m <= p.k(); ++m) {
    const Rational s = p.block(m + 1) % 2 == 0 ? 1 : -1;
    q.push_back(s * a(p.nj(m - 1), p.nj(m + 1) - 1));
  }
  return q;
}

template <class T>
linalg::Matrix<T> section_u(const CellCoordinates<T>& c) {
  const ParabolicShape& p = c.p;
  const int n = p.n();
  auto u = linalg::Matrix<T>::identity(n);
  if (p.k() == 0) return u;
  for (int J = 1; J <= n; ++J) {
    int l = 0;
    while (l < p.k() && p.nj(l + 1) < J) ++l;
    const int j = l == 0 ? 1 : l;
    const int lo = l == 0 ? 1 : std::max(1, J - p.nj(l));
    for (int r = lo; r < J; ++r) u(r - 1, J - 1) = c.get(j, J - r);
  }
  return u;
}

template <class T>
linalg::Matrix<T> section_u(const Point<T>& x, const ParabolicShape& p) {
  return section_u(coordinates(x, p));
}

template <class T>
linalg::Matrix<T> ask_conjugate(const Point<T>& x, const ParabolicShape& p) {
  const auto u = section_u(x, p);
  const int n = x.n;
  linalg::Matrix<T> f(n, n);
  for (int i = 1; i < n; ++i) f(i, i - 1) = T(1);
  auto inv = linalg::inverse(u);
  if (!inv) throw InternalError("section matrix is singular");
  return *inv * f * u;
}

template <class T>
bool same_flag(const linalg::Matrix<T>& a, const linalg::Matrix<T>& b) {
  const int n = a.rows();
  for (int c = n - 1; c >= 0; --c) {
    linalg::Matrix<T> m(n, 2 * (n - c));
    for (int i = 0; i < n; ++i)
      for (int j = c; j < n; ++j) {
        m(i, j - c) = a(i, j);
        m(i, n - c + j - c) = b(i, j);
      }
    if (linalg::rank(m) != n - c) return false;
  }
  return true;
}

template <class T>
linalg::Matrix<T> reconstruct_matrix(const CellCoordinates<T>& c) {
  const int n = c.p.n();
  const auto g = section_u(c) * permutation_matrix<T>(weyl::longest_of_WP(c.p));
  linalg::Matrix<T> x(n, n);
  for (int col = 1; col <= n; ++col) {
    const int j = n + 1 - col;
    std::vector<int> rows, cols;
    for (int r = 0; r < col; ++r) rows.push_back(r);
    for (int k = j - 1; k < n; ++k) cols.push_back(k);
    std::vector<T> rhs(col, T(0));
    rhs[col - 1] = T(1);
    auto beta = linalg::solve(g.sub(rows, cols), rhs);
    if (!beta) throw ValidationError("coordinates are not in the image of the big cell");
    for (int i = 0; i < n; ++i) {
      T s = T(0);
      for (std::size_t k = 0; k < cols.size(); ++k) s += g(i, cols[k]) * (*beta)[k];
      x(i, col - 1) = s;
    }
  }
  return x;
}

template <class T>
double toeplitz_defect(const linalg::Matrix<T>& x) {
  const int n = x.rows();
  double worst = 0;
  bool exact_mismatch = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T expect = i < j ? T(0) : (i == j ? T(1) : x(i - j, 0));
      T diff = x(i, j) - expect;
      if (!is_zero(diff)) exact_mismatch = true;
      worst = std::max(worst, magnitude(diff));
    }
  if (exact_mismatch && worst == 0) worst = 1e-300;
  return worst;
}

template <class T>
Point<T> reconstruct(const CellCoordinates<T>& c, double tol) {
  const auto x = reconstruct_matrix(c);
  const double defect = toeplitz_defect(x);
  if constexpr (std::is_floating_point_v<T>) {
    double scale = 1;
    for (int i = 0; i < x.rows(); ++i) scale = std::max(scale, magnitude(x(i, 0)));
    if (defect > tol * scale) throw ValidationError("reconstructed matrix is not Toeplitz (defect " + std::to_string(defect) + ")");
  } else {
    (void)tol;
    if (defect != 0) throw ValidationError("reconstructed matrix is not Toeplitz");
  }
  Point<T> r = Point<T>::identity(c.p.n());
  for (int l = 1; l < c.p.n(); ++l) r.a[l - 1] = x(l, 0);
  return r;
}

template <class T>
T eval_E_polynomial(const poly::Poly& f, const CellCoordinates<T>& c) {
  T s = T(0);
  for (auto& [m, coeff] : f.terms()) {
    T t;
    if constexpr (std::is_floating_point_v<T>) t = coeff.get_d();
    else t = coeff;
    for (auto& [v, e] : m.factors()) {
      if (v.family != poly::Family::E) throw ValidationError("expected a polynomial in E-symbols, found " + v.name());
      t *= power(c.get(v.a, v.b), e);
    }
    s += t;
  }
  return s;
}

template <class T>
T eval_schubert(const Permutation& w, const CellCoordinates<T>& c) {
  const auto& R = qcoh::ring(c.p);
  return eval_E_polynomial(R.quantum_schubert(R.index_of(w)), c);
}

template <class T>
T eval_schubert(const Permutation& w, const Point<T>& x, const ParabolicShape& p) {
  return eval_schubert(w, coordinates(x, p));
}

FloatPoint grassmannian_chart_point(int d, int n, double t) {
  const FloatPoint v = toeplitz::positive_curve(d, n, t);
  CellCoordinates<double> c{ParabolicShape::grassmannian(d, n), {{}}};
  for (int i = 1; i <= d; ++i) c.G[0].push_back(v.coeff(i));
  return reconstruct(c);
}

#define QFLAG_INSTANTIATE(T)                                                                      \
  template linalg::Matrix<T> permutation_matrix<T>(const Permutation&);                           \
  template linalg::Matrix<T> representative(const Point<T>&);                                     \
  template T g_function(int, int, const linalg::Matrix<T>&);                                      \
  template T g_function(int, int, const Point<T>&);                                               \
  template struct CellCoordinates<T>;                                                             \
  template CellCoordinates<T> coordinates(const Point<T>&, const ParabolicShape&);                \
  template std::vector<T> kostant_q(const Point<T>&);                                             \
  template std::vector<T> genkos_power(const Point<T>&, const ParabolicShape&);                   \
  template linalg::Matrix<T> section_u(const CellCoordinates<T>&);                                \
  template linalg::Matrix<T> section_u(const Point<T>&, const ParabolicShape&);                   \
  template linalg::Matrix<T> ask_conjugate(const Point<T>&, const ParabolicShape&);               \
  template bool same_flag(const linalg::Matrix<T>&, const linalg::Matrix<T>&);                    \
  template linalg::Matrix<T> reconstruct_matrix(const CellCoordinates<T>&);                       \
  template double toeplitz_defect(const linalg::Matrix<T>&);                                      \
  template Point<T> reconstruct(const CellCoordinates<T>&, double);                               \
  template T eval_E_polynomial(const poly::Poly&, const CellCoordinates<T>&);                     \
  template T eval_schubert(const Permutation&, const CellCoordinates<T>&);                        \
  template T eval_schubert(const Permutation&, const Point<T>&, const ParabolicShape&);

QFLAG_INSTANTIATE(Rational)
QFLAG_INSTANTIATE(double)

}  // namespace qflag::peterson
