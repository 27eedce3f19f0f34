#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qflag/errors.hpp"
#include "qflag/peterson.hpp"
#include "qflag/solver.hpp"

using namespace qflag;
using linalg::Matrix;
using weyl::ParabolicShape;
using weyl::Permutation;

namespace {

Matrix<double> mat(std::vector<std::vector<double>> rows) {
  Matrix<double> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST(Msigma, ProjectiveLine) {
  const auto m = solver::build_Msigma(ParabolicShape::full_flag(2), {4.0});
  EXPECT_EQ(m, mat({{1, 4}, {1, 1}}));
}

TEST(Msigma, NonnegativeAndIndecomposable) {
  std::mt19937_64 g(3);
  for (int n = 2; n <= 4; ++n)
    for (auto& p : ParabolicShape::all(n)) {
      std::vector<double> Q;
      for (int j = 0; j < p.k(); ++j) Q.push_back(0.1 + (g() % 1000) / 100.0);
      const auto m = solver::build_Msigma(p, Q);
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) EXPECT_GE(m(i, j), 0);
      EXPECT_TRUE(solver::is_indecomposable(m)) << p.to_string();
    }
}

TEST(Msigma, RejectsBadQ) {
  EXPECT_THROW(solver::build_Msigma(ParabolicShape::full_flag(2), {0.0}), ValidationError);
  EXPECT_THROW(solver::build_Msigma(ParabolicShape::full_flag(2), {1.0, 2.0}), ValidationError);
  EXPECT_THROW(solver::build_Msigma(ParabolicShape::full_flag(2), {std::nan("")}), ValidationError);
}

TEST(PowerIteration, TwoByTwo) {
  const auto r = solver::pf_solve(mat({{1, 4}, {1, 1}}));
  EXPECT_NEAR(r.eigenvalue, 3.0, 1e-12);
  EXPECT_NEAR(r.vector[0] / r.vector[1], 2.0, 1e-12);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(PowerIteration, PeriodicMatrixConverges) {
  // Irreducible but imprimitive: the +I shift is what makes this converge.
  const auto r = solver::pf_solve(mat({{0, 2}, {2, 0}}));
  EXPECT_NEAR(r.eigenvalue, 2.0, 1e-12);
  EXPECT_NEAR(r.vector[0], r.vector[1], 1e-12);
}

TEST(PowerIteration, Failures) {
  EXPECT_THROW(solver::pf_solve(mat({{1, -1}, {1, 1}})), ValidationError);
  EXPECT_THROW(solver::pf_solve(mat({{1, 4}, {1, 1}}), 0.0, 50), ConvergenceError);
  EXPECT_FALSE(solver::is_indecomposable(mat({{1, 1}, {0, 1}})));
}

TEST(PositivePoint, ProjectiveLine) {
  const auto pp = solver::positive_point(ParabolicShape::full_flag(2), {4.0});
  EXPECT_NEAR(pp.schubert_values.at(Permutation::simple(1, 2)), 2.0, 1e-12);
  EXPECT_NEAR(pp.schubert_values.at(Permutation::identity(2)), 1.0, 1e-15);
  EXPECT_NEAR(pp.reconstructed.a[0], 0.5, 1e-12);
  EXPECT_NEAR(pp.euler_value, 4.0, 1e-12);
}

TEST(PositivePoint, UnitQRoundTrip) {
  const auto pp = solver::positive_point(ParabolicShape::full_flag(2), {1.0});
  EXPECT_NEAR(pp.reconstructed.a[0], 1.0, 1e-12);
}

TEST(PositivePoint, RoundTripAllShapes) {
  std::mt19937_64 g(5);
  for (int n = 2; n <= 4; ++n)
    for (auto& p : ParabolicShape::all(n))
      for (int t = 0; t < 3; ++t) {
        std::vector<double> Q;
        for (int j = 0; j < p.k(); ++j) Q.push_back(0.05 + (g() % 1000) / 100.0);
        const auto pp = solver::positive_point(p, Q);
        for (auto& [w, v] : pp.schubert_values) EXPECT_GT(v, 0);
        EXPECT_LT(pp.residual, 1e-12);
        EXPECT_LT(pp.generator_defect, 1e-9);
        EXPECT_GT(pp.euler_value, 0);
        EXPECT_TRUE(toeplitz::is_tnn(pp.reconstructed, 1e-9));
        EXPECT_EQ(toeplitz::stratum(pp.reconstructed, 1e-12).ip, p.ip());
        const auto q = peterson::q_values(pp.reconstructed, p, 1e-12);
        for (int j = 0; j < p.k(); ++j) EXPECT_NEAR(q[j], Q[j], 1e-8 * std::max(1.0, Q[j]));
      }
}

TEST(Inverse, FlagThreeExample) {
  const auto r = solver::tnn_inverse({3, 1});
  EXPECT_TRUE(r.tnn);
  EXPECT_NEAR(r.x.a[0], 2.0, 1e-10);
  EXPECT_NEAR(r.x.a[1], 1.0, 1e-10);
  EXPECT_LT(r.max_residual, 1e-8);
  EXPECT_EQ(r.ip, (std::vector<int>{1, 2}));
}

TEST(Inverse, ZeroPatterns) {
  EXPECT_EQ(solver::tnn_inverse({0, 0, 0}).x.a, (std::vector<double>{0, 0, 0}));
  for (auto d : std::vector<std::vector<double>>{{0, 1}, {2, 0}, {0, 2, 0}, {1, 0, 3}, {0, 0, 4, 0}}) {
    const auto r = solver::tnn_inverse(d);
    EXPECT_TRUE(r.tnn);
    EXPECT_LT(r.max_residual, 1e-8);
  }
  EXPECT_THROW(solver::tnn_inverse({1, -1}), ValidationError);
  EXPECT_THROW(solver::tnn_inverse({}), ValidationError);
}

TEST(Inverse, DeltaToQ) {
  // Big cell: q_j = Delta_{j-1} Delta_{j+1} / Delta_j^2.
  const auto q = solver::q_from_deltas({3, 1}, ParabolicShape::full_flag(3));
  EXPECT_NEAR(q[0], 1.0 / 9, 1e-15);
  EXPECT_NEAR(q[1], 3.0, 1e-15);
}

TEST(SpecialClass, Words) {
  const auto p = ParabolicShape(4, {1, 3});
  EXPECT_EQ(solver::special_class(1, 1, p), Permutation::simple(1, 4));
  EXPECT_EQ(solver::special_class(2, 2, p), Permutation::from_word({2, 3}, 4));
  for (int j = 1; j <= p.k(); ++j)
    for (int i = 1; i <= p.nj(j); ++i) EXPECT_TRUE(weyl::in_WP(solver::special_class(j, i, p), p));
}
