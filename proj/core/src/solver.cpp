#include "qflag/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qflag/errors.hpp"
#include "qflag/peterson.hpp"
#include "qflag/qcoh.hpp"

namespace qflag::solver {

using linalg::Matrix;

namespace {

void normalize_sum(std::vector<double>& v) {
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x /= s;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void normalize_max(Matrix<double>& m) {
  double s = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s = std::max(s, std::abs(m(i, j)));
  if (s > 0) m = m.scaled(1 / s);
}

}  // namespace

Matrix<double> evaluate_operator(const Matrix<poly::Poly>& m, const std::vector<double>& Q) {
  std::map<poly::Var, double> vals;
  for (std::size_t j = 0; j < Q.size(); ++j) vals[poly::Var::q(static_cast<int>(j) + 1)] = Q[j];
  Matrix<double> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = m(i, j).evaluate(vals);
  return r;
}

bool is_indecomposable(const Matrix<double>& m) {
  const int n = m.rows();
  auto reach_all = [&](bool transpose) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        const double v = transpose ? m(j, i) : m(i, j);
        if (v != 0 && !seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return n > 0 && reach_all(false) && reach_all(true);
}

Matrix<double> build_Msigma(const ParabolicShape& p, const std::vector<double>& Q) {
  if (static_cast<int>(Q.size()) != p.k()) throw ValidationError("expected " + std::to_string(p.k()) + " quantum parameters");
  for (double q : Q)
    if (!(q > 0) || !std::isfinite(q)) throw ValidationError("quantum parameters must be positive");
  Matrix<double> m = evaluate_operator(qcoh::ring(p).sigma_operator(), Q);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) throw InternalError("M_sigma has a negative entry");
  if (!is_indecomposable(m)) throw InternalError("M_sigma is decomposable for " + p.to_string());
  return m;
}

PfResult pf_solve(const Matrix<double>& m, double tol, int max_iter, const std::vector<double>& start) {
  const int n = m.rows();
  if (n == 0 || m.cols() != n) throw ValidationError("pf_solve needs a nonempty square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) < 0) throw ValidationError("pf_solve needs a nonnegative matrix");
  const Matrix<double> b = m + Matrix<double>::identity(n);
  std::vector<double> v = start.empty() ? std::vector<double>(n, 1.0) : start;
  if (static_cast<int>(v.size()) != n) throw ValidationError("start vector has the wrong size");
  for (double x : v)
    if (!(x > 0)) throw ValidationError("start vector must be positive");
  normalize_sum(v);

  // Repeated squaring: after s steps c is proportional to b^(2^s).
  PfResult out;
  Matrix<double> c = b;
  normalize_max(c);
  std::vector<double> prev = v;
  for (int s = 0; s < 60; ++s) {
    std::vector<double> w = c.apply(v);
    normalize_sum(w);
    const double d = max_diff(w, prev);
    prev = w;
    if (s > 0 && d < tol) break;
    c = c * c;
    normalize_max(c);
  }
  v = prev;
  // Plain iterations to certify.
  for (int it = 0;; ++it) {
    if (it >= max_iter) throw ConvergenceError("power iteration did not converge");
    std::vector<double> w = b.apply(v);
    normalize_sum(w);
    const double d = max_diff(w, v);
    v = std::move(w);
    out.iterations = it + 1;
    if (d < tol) break;
  }
  for (double x : v)
    if (!(x > 0)) throw ConvergenceError("Perron-Frobenius vector is not positive");
  const std::vector<double> mv = m.apply(v);
  out.eigenvalue = std::accumulate(mv.begin(), mv.end(), 0.0) / std::accumulate(v.begin(), v.end(), 0.0);
  double r = 0, vmax = 0;
  for (int i = 0; i < n; ++i) {
    r = std::max(r, std::abs(mv[i] - out.eigenvalue * v[i]));
    vmax = std::max(vmax, v[i]);
  }
  out.residual = r / (std::max(out.eigenvalue, 1e-300) * vmax);
  out.vector = std::move(v);
  return out;
}

Permutation special_class(int j, int i, const ParabolicShape& p) {
  std::vector<int> word;
  for (int s = p.nj(j) - i + 1; s <= p.nj(j); ++s) word.push_back(s);
  return Permutation::from_word(word, p.n());
}

PositivePoint positive_point(const ParabolicShape& p, const std::vector<double>& Q, double tol, int max_iter) {
  const auto& R = qcoh::ring(p);
  const Matrix<double> m = build_Msigma(p, Q);
  const PfResult pf = pf_solve(m, tol, max_iter);

  PositivePoint out;
  out.p = p;
  out.Q = Q;
  out.eigenvalue = pf.eigenvalue;
  out.residual = pf.residual;
  std::vector<double> mu = pf.vector;
  const double top = mu[R.index_of(weyl::longest_min_rep(p))];
  for (auto& v : mu) v /= top;
  for (const auto& w : R.basis()) out.schubert_values[w] = mu[R.index_of(weyl::pd(w, p))];

  peterson::CellCoordinates<double> coords{p, {}};
  for (int j = 1; j <= p.k(); ++j) {
    std::vector<double> row;
    for (int i = 1; i <= p.nj(j); ++i) row.push_back(out.schubert_values.at(special_class(j, i, p)));
    coords.G.push_back(std::move(row));
  }
  double mumax = *std::max_element(mu.begin(), mu.end());
  for (int j = 1; j <= p.k(); ++j)
    for (int i = 1; i <= p.nj(j); ++i) {
      const Permutation g = special_class(j, i, p);
      const auto mg = evaluate_operator(R.class_operator(g), Q);
      const auto r = mg.apply(mu);
      const double lam = out.schubert_values.at(g);
      double d = 0;
      for (std::size_t t = 0; t < mu.size(); ++t) d = std::max(d, std::abs(r[t] - lam * mu[t]));
      out.generator_defect = std::max(out.generator_defect, d / (std::max(lam, 1.0) * mumax));
    }
  out.reconstructed = peterson::reconstruct(coords, 1e-8);
  for (const auto& w : R.basis()) out.euler_value += out.schubert_values.at(w) * out.schubert_values.at(weyl::pd(w, p));
  return out;
}

std::vector<double> q_from_deltas(const std::vector<double>& deltas, const ParabolicShape& p) {
  std::vector<double> d{1.0};
  d.insert(d.end(), deltas.begin(), deltas.end());
  d.push_back(1.0);
  std::vector<double> q;
  for (int j = 1; j <= p.k(); ++j) {
    const int mj = p.block(j), mj1 = p.block(j + 1);
    const double r = std::pow(d[p.nj(j - 1)], mj1) * std::pow(d[p.nj(j + 1)], mj) / std::pow(d[p.nj(j)], mj + mj1);
    if (!(r > 0)) throw ValidationError("Delta profile gives a nonpositive radicand");
    q.push_back(std::pow(r, 1.0 / (mj * mj1)));
  }
  return q;
}

InverseResult tnn_inverse(const std::vector<double>& deltas, double tol) {
  const int n = static_cast<int>(deltas.size()) + 1;
  if (n < 2) throw ValidationError("need at least one Delta value");
  InverseResult out;
  for (int i = 1; i < n; ++i) {
    const double v = deltas[i - 1];
    if (!(v >= 0) || !std::isfinite(v)) throw ValidationError("Delta values must be nonnegative");
    if (v > 0) out.ip.push_back(i);
  }
  if (out.ip.empty()) {
    out.x = FloatPoint::identity(n);
  } else {
    const ParabolicShape p(n, out.ip);
    out.x = positive_point(p, q_from_deltas(deltas, p), tol).reconstructed;
  }
  const auto d = toeplitz::deltas(out.x);
  for (int i = 1; i < n; ++i) {
    out.deltas.push_back(d[i]);
    out.residuals.push_back(d[i] - deltas[i - 1]);
    out.max_residual = std::max(out.max_residual, std::abs(d[i] - deltas[i - 1]));
  }
  out.tnn = toeplitz::is_tnn(out.x, 1e-9);
  return out;
}

}  // namespace qflag::solver
