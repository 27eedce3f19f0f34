#include <gtest/gtest.h>

#include <random>

#include "qflag/errors.hpp"
#include "qflag/poly.hpp"

using namespace qflag::poly;

namespace {

Poly x(int i) { return Poly::var(Var::x(i)); }
Poly q(int j) { return Poly::var(Var::q(j)); }

Poly random_poly(std::mt19937_64& g, int nvars, int terms, int maxdeg) {
  Poly f;
  for (int t = 0; t < terms; ++t) {
    Poly m(static_cast<long>(g() % 7) - 3);
    for (int v = 1; v <= nvars; ++v) m *= x(v).pow(static_cast<int>(g() % (maxdeg + 1)));
    f += m;
  }
  return f;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(rational_to_string(parse_rational("3/6")), "1/2");
  EXPECT_EQ(rational_to_string(parse_rational("-4")), "-4");
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5e1"), Rational(-15));
  EXPECT_THROW(parse_rational("1/0"), qflag::ValidationError);
  EXPECT_THROW(parse_rational("abc"), qflag::ValidationError);
  EXPECT_THROW(parse_rational(""), qflag::ValidationError);
}

TEST(Poly, EvaluateExample) {
  const Poly f = x(1) * x(2) * x(3) + x(1) * q(2) + x(3) * q(1);
  std::map<Var, Rational> v{{Var::x(1), 1}, {Var::x(2), 2}, {Var::x(3), 3}, {Var::q(1), 1}, {Var::q(2), 1}};
  EXPECT_EQ(f.evaluate(v), 10);
  std::map<Var, double> vd{{Var::x(1), 1}, {Var::x(2), 2}, {Var::x(3), 3}, {Var::q(1), 1}, {Var::q(2), 1}};
  EXPECT_DOUBLE_EQ(f.evaluate(vd), 10.0);
}

TEST(Poly, ArithmeticLaws) {
  std::mt19937_64 g(7);
  for (int t = 0; t < 20; ++t) {
    auto a = random_poly(g, 3, 4, 2), b = random_poly(g, 3, 4, 2), c = random_poly(g, 3, 3, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(2), a * a);
  }
}

TEST(Poly, CancellationLeavesNoZeroTerms) {
  Poly f = x(1) + x(2);
  f -= x(1);
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(f, x(2));
  EXPECT_EQ(Poly(0).size(), 0u);
}

TEST(Poly, SubstituteAndDerivative) {
  const Poly f = x(1).pow(2) * x(2) + q(1);
  std::map<Var, Poly> s{{Var::x(1), x(2) + Poly(1)}};
  EXPECT_EQ(f.substitute(s), (x(2) + Poly(1)).pow(2) * x(2) + q(1));
  EXPECT_EQ(f.derivative(Var::x(1)), x(1) * x(2) * Rational(2));
  EXPECT_TRUE(f.derivative(Var::x(3)).is_zero());
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.variables(), (std::set<Var>{Var::x(1), Var::x(2), Var::q(1)}));
}

TEST(Poly, MonomialOrderIsCanonical) {
  // x < sigma < q < lambda in the variable order.
  EXPECT_LT(Var::x(5), Var::sigma(1, 1));
  EXPECT_LT(Var::sigma(3, 2), Var::q(1));
  EXPECT_LT(Var::q(4), Var::lambda());
  const Poly f = q(1) + x(2) * x(1);
  EXPECT_EQ(f.to_string(), (x(1) * x(2) + q(1)).to_string());
}

TEST(DividedDifference, Example) { EXPECT_EQ(divided_difference(x(1).pow(2) * x(2), 1), x(1) * x(2)); }

TEST(DividedDifference, Relations) {
  std::mt19937_64 g(11);
  for (int t = 0; t < 15; ++t) {
    const Poly f = random_poly(g, 4, 5, 3), h = random_poly(g, 4, 3, 2);
    for (int i = 1; i <= 3; ++i) {
      EXPECT_TRUE(divided_difference(divided_difference(f, i), i).is_zero());
      // Twisted Leibniz rule.
      const Poly si_f = f.swap_vars(Var::x(i), Var::x(i + 1));
      EXPECT_EQ(divided_difference(f * h, i), divided_difference(f, i) * h + si_f * divided_difference(h, i));
    }
    auto d = [&](Poly p, std::vector<int> w) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) p = divided_difference(p, *it);
      return p;
    };
    EXPECT_EQ(d(f, {1, 2, 1}), d(f, {2, 1, 2}));
    EXPECT_EQ(d(f, {1, 3}), d(f, {3, 1}));
  }
}
