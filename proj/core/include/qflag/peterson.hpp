#pragma once

#include <vector>

#include "qflag/linalg.hpp"
#include "qflag/poly.hpp"
#include "qflag/toeplitz.hpp"
#include "qflag/weyl.hpp"

namespace qflag::peterson {

using poly::Rational;
using toeplitz::ExactPoint;
using toeplitz::FloatPoint;
using toeplitz::Point;
using weyl::ParabolicShape;
using weyl::Permutation;

// Column j of the matrix is e_{w(j)}.
template <class T>
linalg::Matrix<T> permutation_matrix(const Permutation& w);

// g = x w_0, a representative of the flag x w_0 B^-.
template <class T>
linalg::Matrix<T> representative(const Point<T>& x);

// G^m_i on a representative g: the minor of g with rows {m-i+1, m+2, .., n}
// and columns {m+1..n}, divided by the minor with rows and columns {m+1..n}.
// Depends only on g B^-. Throws ValidationError when the denominator vanishes.
template <class T>
T g_function(int m, int i, const linalg::Matrix<T>& g);
template <class T>
T g_function(int m, int i, const Point<T>& x);

// G^{n_j}_i for j = 1..k, i = 1..n_j; G[j-1][i-1].
template <class T>
struct CellCoordinates {
  ParabolicShape p;
  std::vector<std::vector<T>> G;

  T get(int j, int i) const;  // with G^{n_j}_0 = 1 and 0 outside 0..n_j
};

template <class T>
CellCoordinates<T> coordinates(const Point<T>& x, const ParabolicShape& p);

// Throws ValidationError unless the Delta zero pattern of x is exactly p
// (floating points use the tolerance).
void require_stratum(const ExactPoint& x, const ParabolicShape& p);
void require_stratum(const FloatPoint& x, const ParabolicShape& p, double tol = 1e-10);

// q_j = Delta_{j-1} Delta_{j+1} / Delta_j^2 on the big cell.
template <class T>
std::vector<T> kostant_q(const Point<T>& x);
// Right-hand side Delta_{n_{j-1}}^{m_{j+1}} Delta_{n_{j+1}}^{m_j} / Delta_{n_j}^{m_j + m_{j+1}}
// of the power identity for q_j^{m_j m_{j+1}}, m_j = n_j - n_{j-1}.
template <class T>
std::vector<T> genkos_power(const Point<T>& x, const ParabolicShape& p);
// q from the power identity by positive real roots; refuses negative radicands
// when the root is not unique.
std::vector<double> q_values(const FloatPoint& x, const ParabolicShape& p, double tol = 1e-10);
// Exact q read off the conjugated nilpotent u^{-1} f u (see ask_conjugate).
std::vector<Rational> q_values(const ExactPoint& x, const ParabolicShape& p);

// Upper unitriangular section: column J in (n_l, n_{l+1}] has entries
// u_{r,J} = G^{n_l}_{J-r} for J - n_l <= r <= J, the first block using G^{n_1}.
template <class T>
linalg::Matrix<T> section_u(const CellCoordinates<T>& c);
template <class T>
linalg::Matrix<T> section_u(const Point<T>& x, const ParabolicShape& p);

// u^{-1} f u with f the principal nilpotent (ones below the diagonal); on X_P it
// has the ASK pattern with the point's sigma and q values.
template <class T>
linalg::Matrix<T> ask_conjugate(const Point<T>& x, const ParabolicShape& p);

// Whether two invertible matrices define the same point of G/B^-: for every c
// the spans of columns c..n agree.
template <class T>
bool same_flag(const linalg::Matrix<T>& a, const linalg::Matrix<T>& b);

// Lower unitriangular x with x w_0 B^- = section_u(c) w_P B^-. Also returns the
// largest deviation from Toeplitz form (0 in exact arithmetic for genuine data).
template <class T>
linalg::Matrix<T> reconstruct_matrix(const CellCoordinates<T>& c);
template <class T>
double toeplitz_defect(const linalg::Matrix<T>& x);
// Throws ValidationError when the result is not Toeplitz (exactly, or beyond
// tol relative to the largest entry in floating mode).
template <class T>
Point<T> reconstruct(const CellCoordinates<T>& c, double tol = 1e-8);

// sigma_w via C_w with E^{(j)}_i -> G^{n_j}_i.
template <class T>
T eval_schubert(const Permutation& w, const CellCoordinates<T>& c);
template <class T>
T eval_schubert(const Permutation& w, const Point<T>& x, const ParabolicShape& p);
// Any polynomial in E-symbols, E^{(j)}_i -> G^{n_j}_i.
template <class T>
T eval_E_polynomial(const poly::Poly& f, const CellCoordinates<T>& c);

// Point of X_{P_d} with G^d_i = e_i of the positive-curve roots; q = t^n there.
FloatPoint grassmannian_chart_point(int d, int n, double t);

}  // namespace qflag::peterson
