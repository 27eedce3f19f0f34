#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qflag/errors.hpp"
#include "qflag/weyl.hpp"

using namespace qflag;
using weyl::ParabolicShape;
using weyl::Permutation;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Permutation, CompositionConvention) {
  const auto s1 = Permutation::simple(1, 3), s2 = Permutation::simple(2, 3);
  EXPECT_EQ(s2 * s1, P({3, 1, 2}));
  EXPECT_EQ(s1 * s2, P({2, 3, 1}));
  EXPECT_EQ(Permutation::from_word({2, 1}, 3), P({3, 1, 2}));
  // Right multiplication by s_i swaps positions i and i+1.
  EXPECT_EQ(P({3, 1, 2}) * s1, P({1, 3, 2}));
}

TEST(Permutation, LengthAndWords) {
  EXPECT_EQ(Permutation::longest(4).length(), 6);
  EXPECT_EQ(P({3, 1, 2}).length(), 2);
  for (int n = 2; n <= 5; ++n)
    for (auto& w : weyl::min_coset_reps(ParabolicShape::full_flag(n))) {
      auto word = w.reduced_word();
      EXPECT_EQ(static_cast<int>(word.size()), w.length());
      EXPECT_EQ(Permutation::from_word(word, n), w);
      EXPECT_TRUE((w * w.inverse()).is_identity());
    }
}

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(P({1, 1, 2}), ValidationError);
  EXPECT_THROW(P({0, 1}), ValidationError);
  EXPECT_THROW(ParabolicShape(3, {3}), ValidationError);
  EXPECT_THROW(ParabolicShape(4, {2, 1}), ValidationError);
}

TEST(Cosets, SmallExamples) {
  EXPECT_EQ(weyl::min_coset_reps(ParabolicShape(3, {1})), (std::vector<Permutation>{P({1, 2, 3}), P({2, 1, 3}), P({3, 1, 2})}));
  auto g = weyl::min_coset_reps(ParabolicShape(4, {2}));
  ASSERT_EQ(g.size(), 6u);
  for (auto& w : g) EXPECT_TRUE(w(1) < w(2) && w(3) < w(4));
}

TEST(Cosets, CountsAndDescents) {
  for (int n = 2; n <= 6; ++n)
    for (auto& p : ParabolicShape::all(n)) {
      long expect = factorial(n);
      for (int j = 1; j <= p.k() + 1; ++j) expect /= factorial(p.block(j));
      const auto reps = weyl::min_coset_reps(p);
      EXPECT_EQ(static_cast<long>(reps.size()), expect) << p.to_string();
      for (auto& w : reps)
        for (int d : w.right_descents()) EXPECT_TRUE(p.contains(d));
    }
}

TEST(Cosets, MinRepIsConstantOnCosets) {
  const ParabolicShape p(4, {1, 3});
  for (auto& v : weyl::min_coset_reps(ParabolicShape::full_flag(4))) {
    const auto m = weyl::min_rep(v, p);
    EXPECT_TRUE(weyl::in_WP(m, p));
    EXPECT_LE(m.length(), v.length());
    // s_2 generates W_P here.
    EXPECT_EQ(weyl::min_rep(v * Permutation::simple(2, 4), p), m);
  }
}

TEST(Duality, Examples) {
  EXPECT_EQ(weyl::pd(Permutation::simple(1, 3), ParabolicShape::full_flag(3)), P({2, 3, 1}));
  EXPECT_EQ(weyl::pd(Permutation::simple(1, 3), ParabolicShape(3, {1})), Permutation::simple(1, 3));
}

TEST(Duality, InvolutionAndLengths) {
  for (int n = 2; n <= 5; ++n)
    for (auto& p : ParabolicShape::all(n)) {
      const int top = weyl::longest_min_rep(p).length();
      std::set<Permutation> seen;
      for (auto& w : weyl::min_coset_reps(p)) {
        const auto d = weyl::pd(w, p);
        EXPECT_EQ(weyl::pd(d, p), w);
        EXPECT_EQ(w.length() + d.length(), top);
        seen.insert(d);
      }
      EXPECT_EQ(seen.size(), weyl::min_coset_reps(p).size());
    }
}

TEST(Grassmannian, ShapeBijection) {
  EXPECT_EQ(weyl::shape_of_grassmannian(Permutation::simple(1, 2), 1), (weyl::Shape{1}));
  EXPECT_EQ(weyl::shape_of_grassmannian(Permutation::identity(4), 2), (weyl::Shape{0, 0}));
  EXPECT_EQ(weyl::shape_of_grassmannian(P({2, 4, 1, 3}), 2), (weyl::Shape{2, 1}));
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d < n; ++d)
      for (auto& w : weyl::min_coset_reps(ParabolicShape::grassmannian(d, n))) {
        const auto lam = weyl::shape_of_grassmannian(w, d);
        int size = 0;
        for (int part : lam) {
          EXPECT_LE(part, n - d);
          size += part;
        }
        EXPECT_LE(static_cast<int>(lam.size()), d);
        EXPECT_EQ(size, w.length());
        EXPECT_EQ(weyl::perm_of_shape(lam, d, n), w);
      }
  EXPECT_EQ(weyl::conjugate({3, 1}), (weyl::Shape{2, 1, 1}));
}

TEST(Tau, LiteralWords) {
  const auto full3 = ParabolicShape::full_flag(3);
  EXPECT_EQ(weyl::tau_word(1, 1, full3), (std::vector<int>{1}));
  EXPECT_EQ(weyl::tau_word(1, 2, full3), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(weyl::tau(1, 2, full3).length(), 3);
  // For h = l the length is n_{l+1} - n_{l-1} - 1.
  for (int n = 2; n <= 6; ++n)
    for (auto& p : ParabolicShape::all(n))
      for (int j = 1; j <= p.k(); ++j) EXPECT_EQ(weyl::tau(j, j, p).length(), p.nj(j + 1) - p.nj(j - 1) - 1);
}
