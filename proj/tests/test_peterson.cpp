#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qflag/errors.hpp"
#include "qflag/peterson.hpp"
#include "qflag/solver.hpp"

using namespace qflag;
using poly::Rational;
using toeplitz::ExactPoint;
using toeplitz::FloatPoint;
using weyl::ParabolicShape;
using weyl::Permutation;

namespace {

ExactPoint point(std::vector<Rational> a) { return ExactPoint{static_cast<int>(a.size()) + 1, std::move(a)}; }

ExactPoint random_big_cell(std::mt19937_64& g, int n) {
  while (true) {
    ExactPoint x = ExactPoint::identity(n);
    for (auto& v : x.a) {
      v = Rational(static_cast<long>(g() % 13) - 6, 1 + static_cast<long>(g() % 4));
      v.canonicalize();
    }
    if (static_cast<int>(toeplitz::stratum(x).ip.size()) == n - 1) return x;
  }
}

// Totally nonnegative point in the stratum of p.
FloatPoint stratum_point(std::mt19937_64& g, const ParabolicShape& p) {
  std::vector<double> d(p.n() - 1, 0.0);
  for (int i : p.ip()) d[i - 1] = 0.5 + (g() % 1000) / 400.0;
  return solver::tnn_inverse(d).x;
}

}  // namespace

TEST(Coordinates, ProjectiveLine) {
  const auto p = ParabolicShape::full_flag(2);
  const auto x = point({3});
  const auto c = peterson::coordinates(x, p);
  EXPECT_EQ(c.get(1, 1), Rational(1, 3));
  EXPECT_EQ(peterson::eval_schubert(Permutation::simple(1, 2), x, p), Rational(1, 3));
  EXPECT_EQ(peterson::eval_schubert(Permutation::identity(2), x, p), 1);
  EXPECT_EQ(peterson::reconstruct(c).a, x.a);
  EXPECT_EQ(peterson::q_values(point({1}), p), (std::vector<Rational>{1}));
}

TEST(Coordinates, FlagThreeExample) {
  const auto p = ParabolicShape::full_flag(3);
  const auto x = point({2, 1});
  EXPECT_EQ(peterson::kostant_q(x), (std::vector<Rational>{Rational(1, 9), 3}));
  EXPECT_EQ(peterson::q_values(x, p), (std::vector<Rational>{Rational(1, 9), 3}));
  EXPECT_EQ(peterson::eval_schubert(weyl::Permutation({3, 1, 2}), x, p), Rational(1, 3));
  const auto c = peterson::coordinates(x, p);
  const auto lhs = peterson::section_u(c) * peterson::permutation_matrix<Rational>(weyl::longest_of_WP(p));
  EXPECT_TRUE(peterson::same_flag(lhs, peterson::representative(x)));
}

TEST(Coordinates, RoundTripOnBigCell) {
  std::mt19937_64 g(21);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      const auto x = random_big_cell(g, n);
      const auto p = ParabolicShape::full_flag(n);
      EXPECT_EQ(peterson::reconstruct(peterson::coordinates(x, p)).a, x.a);
    }
}

TEST(Coordinates, DenominatorIsDeltaUpToSign) {
  std::mt19937_64 g(23);
  for (int n = 2; n <= 5; ++n) {
    const auto x = random_big_cell(g, n);
    const auto r = peterson::representative(x);
    const auto d = toeplitz::deltas(x);
    for (int m = 1; m < n; ++m) {
      std::vector<int> idx;
      for (int i = m + 1; i <= n; ++i) idx.push_back(i);
      const Rational den = toeplitz::minor(r, idx, idx);
      EXPECT_TRUE(den == d[m] || den == -d[m]) << "n=" << n << " m=" << m;
    }
  }
}

TEST(Coordinates, WrongStratumIsRejected) {
  EXPECT_THROW(peterson::coordinates(point({1, 1}), ParabolicShape::full_flag(3)), ValidationError);
  EXPECT_THROW(peterson::q_values(point({1, 1}), ParabolicShape::full_flag(3)), ValidationError);
}

TEST(QValues, KostantGenKosAndAskAgree) {
  std::mt19937_64 g(25);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      const auto x = random_big_cell(g, n);
      const auto p = ParabolicShape::full_flag(n);
      const auto k = peterson::kostant_q(x);
      EXPECT_EQ(k, peterson::genkos_power(x, p));
      EXPECT_EQ(k, peterson::q_values(x, p));
    }
}

TEST(QValues, PowerIdentityOnPartialStrata) {
  std::mt19937_64 g(27);
  for (int n = 3; n <= 5; ++n)
    for (auto& p : ParabolicShape::all(n)) {
      const auto x = stratum_point(g, p);
      const auto q = peterson::q_values(x, p, 1e-9);
      const auto rhs = peterson::genkos_power(x, p);
      for (int j = 1; j <= p.k(); ++j) {
        const int e = p.block(j) * p.block(j + 1);
        EXPECT_NEAR(std::pow(q[j - 1], e), rhs[j - 1], 1e-8 * std::max(1.0, rhs[j - 1])) << p.to_string();
      }
    }
}

TEST(QValues, ChartPointGivesTToTheN) {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d < n; ++d)
      for (double t : {0.3, 1.0, 1.7}) {
        const auto x = peterson::grassmannian_chart_point(d, n, t);
        EXPECT_TRUE(toeplitz::is_tnn(x, 1e-9));
        const auto q = peterson::q_values(x, ParabolicShape::grassmannian(d, n));
        EXPECT_NEAR(q[0], std::pow(t, n), 1e-10 * std::max(1.0, std::pow(t, n)));
      }
}

TEST(Schubert, SpecialClassesAreCoordinates) {
  std::mt19937_64 g(29);
  for (int n = 2; n <= 5; ++n) {
    const auto p = ParabolicShape::full_flag(n);
    const auto x = random_big_cell(g, n);
    const auto c = peterson::coordinates(x, p);
    for (int j = 1; j <= p.k(); ++j)
      for (int i = 1; i <= p.nj(j); ++i) EXPECT_EQ(peterson::eval_schubert(solver::special_class(j, i, p), c), c.get(j, i));
    EXPECT_EQ(peterson::eval_schubert(Permutation::identity(n), c), 1);
  }
  for (int n = 3; n <= 5; ++n)
    for (auto& p : ParabolicShape::all(n)) {
      const auto x = stratum_point(g, p);
      const auto c = peterson::coordinates(x, p);
      for (int j = 1; j <= p.k(); ++j)
        for (int i = 1; i <= p.nj(j); ++i)
          EXPECT_NEAR(peterson::eval_schubert(solver::special_class(j, i, p), c), c.get(j, i), 1e-9);
    }
}

TEST(Schubert, GrassmannianValuesAreSchurPolynomials) {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d < n; ++d) {
      const double t = 1.2;
      const auto curve = toeplitz::positive_curve(d, n, t);
      const auto x = peterson::grassmannian_chart_point(d, n, t);
      const auto p = ParabolicShape::grassmannian(d, n);
      for (auto& w : weyl::min_coset_reps(p)) {
        // s_lambda(roots) = det(e_{lambda'_i - i + j}) with e_k = a_k of the curve for k <= d.
        const auto conj = weyl::conjugate(weyl::shape_of_grassmannian(w, d));
        const int m = static_cast<int>(conj.size());
        linalg::Matrix<double> a(m, m);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            const int k = conj[i] - i + j;
            a(i, j) = k < 0 || k > d ? 0.0 : curve.coeff(k);
          }
        const double s = m == 0 ? 1.0 : linalg::determinant(a);
        EXPECT_NEAR(peterson::eval_schubert(w, x, p), s, 1e-9 * std::max(1.0, std::abs(s))) << w.to_string();
      }
    }
}

TEST(Ask, ConjugateIsNilpotentWithPointValues) {
  std::mt19937_64 g(31);
  for (int n = 2; n <= 5; ++n) {
    const auto x = random_big_cell(g, n);
    const auto p = ParabolicShape::full_flag(n);
    const auto a = peterson::ask_conjugate(x, p);
    auto power = a;
    for (int i = 1; i < n; ++i) power = power * a;
    EXPECT_EQ(power, linalg::Matrix<Rational>(n, n));
    // Subdiagonal ones and zeros below, as in the ASK pattern.
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (r == c + 1) {
          EXPECT_EQ(a(r, c), 1);
        } else if (r > c + 1) {
          EXPECT_EQ(a(r, c), 0);
        }
      }
  }
}
