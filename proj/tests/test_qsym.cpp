#include <gtest/gtest.h>

#include <map>
#include <random>

#include "qflag/qsym.hpp"
#include "qflag/weyl.hpp"

using namespace qflag;
using poly::Poly;
using poly::Var;
using weyl::ParabolicShape;

namespace {

Poly x(int i) { return Poly::var(Var::x(i)); }
Poly q(int j) { return Poly::var(Var::q(j)); }
Poly sigma(int j, int i) { return Poly::var(Var::sigma(j, i)); }
Poly E(int j, int i) { return Poly::var(Var::E(j, i)); }

std::vector<ParabolicShape> shapes(int max_n) {
  std::vector<ParabolicShape> out;
  for (int n = 2; n <= max_n; ++n)
    for (auto& p : ParabolicShape::all(n)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Classical, ElementarySymmetric) {
  EXPECT_EQ(qsym::classical_e(2, 3), x(1) * x(2) + x(1) * x(3) + x(2) * x(3));
  EXPECT_EQ(qsym::classical_e(0, 3), Poly(1));
  EXPECT_TRUE(qsym::classical_e(4, 3).is_zero());
  EXPECT_EQ(qsym::classical_e_range(1, 2, 3), x(2) + x(3));
}

TEST(QuantumE, A2Example) {
  const auto p = ParabolicShape::full_flag(3);
  std::map<Var, Poly> sub{{Var::sigma(1, 1), x(1)}, {Var::sigma(2, 1), x(2)}, {Var::sigma(3, 1), x(3)}};
  EXPECT_EQ(qsym::quantum_E(3, 1, p).substitute(sub), x(1) + x(2) + x(3));
  EXPECT_EQ(qsym::quantum_E(3, 2, p).substitute(sub), qsym::classical_e(2, 3) + q(1) + q(2));
  EXPECT_EQ(qsym::quantum_E(3, 3, p).substitute(sub), x(1) * x(2) * x(3) + x(1) * q(2) + x(3) * q(1));
}

TEST(QuantumE, BoundaryValues) {
  const auto p = ParabolicShape(4, {2});
  EXPECT_EQ(qsym::quantum_E(0, 0, p), Poly(1));
  EXPECT_TRUE(qsym::quantum_E(0, 1, p).is_zero());
  EXPECT_EQ(qsym::quantum_E(1, 0, p), Poly(1));
  EXPECT_TRUE(qsym::quantum_E(1, 3, p).is_zero());
  EXPECT_EQ(qsym::quantum_E(1, 2, p), sigma(1, 2));
}

TEST(QuantumE, ClassicalLimitIsElementarySymmetric) {
  for (auto& p : shapes(5))
    for (int l = 1; l <= p.k() + 1; ++l)
      for (int i = 0; i <= p.nj(l); ++i)
        EXPECT_EQ(qsym::classical_limit(qsym::quantum_E(l, i, p), p), qsym::classical_e(i, p.nj(l)))
            << p.to_string() << " l=" << l << " i=" << i;
}

TEST(Ask, TwoByTwo) {
  const auto p = ParabolicShape::full_flag(2);
  const auto a = qsym::ask_matrix(2, p);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0][0], -sigma(1, 1));
  EXPECT_EQ(a[0][1], -q(1));
  EXPECT_EQ(a[1][0], Poly(1));
  EXPECT_EQ(a[1][1], -sigma(2, 1));
  const Poly lam = Poly::var(Var::lambda());
  EXPECT_EQ(qsym::characteristic_polynomial(a),
            lam.pow(2) + qsym::quantum_E(2, 1, p) * lam + qsym::quantum_E(2, 2, p));
}

TEST(Ask, CharpolyExamples) {
  EXPECT_TRUE(qsym::charpoly_check(3, ParabolicShape::full_flag(3)));
  EXPECT_TRUE(qsym::charpoly_check(2, ParabolicShape(4, {2})));
}

TEST(Ask, CharpolyAllSmallShapes) {
  for (auto& p : shapes(4))
    for (int l = 1; l <= p.k() + 1; ++l) EXPECT_TRUE(qsym::charpoly_check(l, p)) << p.to_string() << " l=" << l;
}

TEST(StandardMonomials, HilbertSeriesMatchesCosets) {
  for (auto& p : shapes(5)) {
    std::map<int, int> lhs, rhs;
    for (auto& idx : qsym::standard_monomials(p)) ++lhs[qsym::weighted_degree(idx)];
    for (auto& w : weyl::min_coset_reps(p)) ++rhs[w.length()];
    EXPECT_EQ(lhs, rhs) << p.to_string();
    EXPECT_EQ(qsym::presentation(p).standard_exps().size(), weyl::min_coset_reps(p).size());
  }
}

TEST(StandardMonomials, PartitionBounds) {
  const ParabolicShape p(5, {1, 3});
  for (auto& idx : qsym::standard_monomials(p)) {
    ASSERT_EQ(static_cast<int>(idx.lambdas.size()), p.k());
    for (int j = 1; j <= p.k(); ++j) {
      EXPECT_LE(static_cast<int>(idx.lambdas[j - 1].size()), p.nj(j + 1) - p.nj(j));
      for (int part : idx.lambdas[j - 1]) EXPECT_LE(part, p.nj(j));
    }
  }
}

TEST(Straighten, SquareOnProjectiveLine) {
  const auto p = ParabolicShape::full_flag(2);
  const Poly f = E(1, 1) * E(1, 1);
  for (auto s : {qsym::straighten_rewrite(f, p), qsym::straighten_groebner(f, p)}) {
    EXPECT_EQ(qsym::standard_part(s), q(1));
    EXPECT_FALSE(s.ideal_witness.empty());
    for (auto& [cof, i] : s.ideal_witness) EXPECT_TRUE(i >= 1 && i <= 2);
    EXPECT_TRUE(qsym::verify_straightened(f, s, p));
  }
}

TEST(Straighten, ReconstructionOnRandomInputs) {
  std::mt19937_64 g(3);
  for (auto& p : shapes(4))
    for (int t = 0; t < 4; ++t) {
      Poly f;
      for (int term = 0; term < 3; ++term) {
        Poly m(static_cast<long>(g() % 5) - 2);
        for (int r = 0; r < 3; ++r) {
          const int j = 1 + static_cast<int>(g() % p.k());
          m *= E(j, 1 + static_cast<int>(g() % p.nj(j)));
        }
        if (g() % 2) m *= q(1 + static_cast<int>(g() % p.k()));
        f += m;
      }
      const auto s = qsym::straighten(f, p);
      EXPECT_TRUE(qsym::verify_straightened(f, s, p)) << p.to_string() << " " << f.to_string();
      if (p.is_full_flag()) {
        EXPECT_EQ(qsym::straighten_groebner(f, p).standard, s.standard);
      }
    }
}

TEST(Straighten, StandardMonomialsAreFixed) {
  for (auto& p : shapes(4))
    for (auto& idx : qsym::standard_monomials(p)) {
      const auto s = qsym::straighten(qsym::E_symbol_of(idx), p);
      ASSERT_EQ(s.standard.size(), 1u);
      EXPECT_EQ(s.standard.begin()->first, idx);
      EXPECT_EQ(s.standard.begin()->second, Poly(1));
    }
}

TEST(Straighten, IdealElementsVanish) {
  for (auto& p : shapes(4))
    for (int i = 1; i <= p.n(); ++i) {
      const Poly f = E(p.k() + 1, i) * E(1, 1);
      EXPECT_TRUE(qsym::straighten(f, p).standard.empty()) << p.to_string();
    }
}
