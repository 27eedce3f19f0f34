#pragma once

#include <map>
#include <vector>

#include "qflag/linalg.hpp"
#include "qflag/toeplitz.hpp"
#include "qflag/weyl.hpp"

namespace qflag::solver {

using toeplitz::FloatPoint;
using weyl::ParabolicShape;
using weyl::Permutation;

// Evaluates a q-polynomial operator at q = Q.
linalg::Matrix<double> evaluate_operator(const linalg::Matrix<poly::Poly>& m, const std::vector<double>& Q);

// Matrix of multiplication by sigma = sum_w sigma_w in the Schubert basis
// (order of min_coset_reps) with q = Q. Rejects Q with a nonpositive entry and
// throws InternalError if the result is not a nonnegative indecomposable matrix.
linalg::Matrix<double> build_Msigma(const ParabolicShape& p, const std::vector<double>& Q);

// Strong connectivity of the digraph i -> j for m(i, j) != 0.
bool is_indecomposable(const linalg::Matrix<double>& m);

struct PfResult {
  double eigenvalue = 0;
  std::vector<double> vector;  // positive, entries sum to 1
  double residual = 0;         // |Mv - lambda v|_inf / (lambda |v|_inf)
  int iterations = 0;
};

// Power iteration on M + I (accelerated by repeated squaring). Throws
// ConvergenceError when the iterates do not settle within the cap.
PfResult pf_solve(const linalg::Matrix<double>& m, double tol = 1e-13, int max_iter = 200000,
                  const std::vector<double>& start = {});

struct PositivePoint {
  ParabolicShape p;
  std::vector<double> Q;
  std::map<Permutation, double> schubert_values;
  FloatPoint reconstructed;
  double eigenvalue = 0;
  double residual = 0;
  // Largest relative defect of mu as an eigenvector of the special-class operators.
  double generator_defect = 0;
  double euler_value = 0;  // sum_w sigma_w sigma_{PD(w)} at the point
};

PositivePoint positive_point(const ParabolicShape& p, const std::vector<double>& Q, double tol = 1e-13,
                             int max_iter = 200000);

struct InverseResult {
  FloatPoint x;
  std::vector<int> ip;
  std::vector<double> deltas;     // Delta_1..Delta_{n-1} of x
  std::vector<double> residuals;  // deltas - input
  double max_residual = 0;
  bool tnn = false;
};

// Inverse of x -> (Delta_1..Delta_{n-1}) on the totally nonnegative part.
InverseResult tnn_inverse(const std::vector<double>& deltas, double tol = 1e-13);

// q_j from a Delta profile (Delta_0 = Delta_n = 1 implied) by positive roots.
std::vector<double> q_from_deltas(const std::vector<double>& deltas, const ParabolicShape& p);

// sigma_{s_{n_j - i + 1} ... s_{n_j}}.
Permutation special_class(int j, int i, const ParabolicShape& p);

}  // namespace qflag::solver
