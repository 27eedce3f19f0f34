#include <gtest/gtest.h>

#include "qflag/errors.hpp"
#include "qflag/io.hpp"

using namespace qflag;
using io::json;
using poly::Poly;
using poly::Rational;
using poly::Var;
using weyl::Permutation;

TEST(Json, Permutation) {
  EXPECT_EQ(io::to_json(Permutation({2, 1, 3})).dump(), "[2,1,3]");
  EXPECT_EQ(io::permutation_from_json(json::parse("[3,1,2]")), Permutation({3, 1, 2}));
  EXPECT_THROW(io::permutation_from_json(json::parse("[1,1]")), ValidationError);
  EXPECT_THROW(io::permutation_from_json(json::parse("\"x\"")), ValidationError);
}

TEST(Json, PolynomialFormat) {
  const Poly f = Poly::var(Var::x(1), 2) * Rational(1, 2) + Poly::var(Var::q(1));
  EXPECT_EQ(io::to_json(f).dump(),
            R"([{"coeff":"1/2","monomial":[["x",1,2]]},{"coeff":"1","monomial":[["q",1,1]]}])");
  const Poly g = Poly::var(Var::sigma(2, 1)) * Poly::var(Var::E(1, 2), 3) * Poly::var(Var::lambda()) - Poly(3);
  EXPECT_EQ(io::poly_from_json(io::to_json(g)), g);
  EXPECT_THROW(io::poly_from_json(json::parse(R"([{"coeff":"1","monomial":[["y",1,1]]}])")), ValidationError);
  EXPECT_THROW(io::poly_from_json(json::parse(R"([{"coeff":"1","monomial":[["x",1,0]]}])")), ValidationError);
}

TEST(Json, Expansion) {
  qcoh::Expansion e = qcoh::add(qcoh::schubert_class(Permutation({3, 1, 2})),
                                qcoh::scale(qcoh::schubert_class(Permutation({1, 2, 3})), Poly::var(Var::q(1))));
  const auto j = io::to_json(e);
  EXPECT_EQ(j[0]["w"].dump(), "[1,2,3]");
  EXPECT_EQ(io::expansion_from_json(j), e);
}

TEST(Json, Points) {
  toeplitz::ExactPoint x{3, {Rational(2), Rational(1, 3)}};
  EXPECT_EQ(io::to_json(x).dump(), R"({"a":["2","1/3"],"n":3})");
  EXPECT_EQ(io::exact_point_from_json(io::to_json(x)).a, x.a);
  EXPECT_EQ(io::exact_point_from_json(json::parse(R"({"n":3,"a":[0.5,"1"]})")).a[0], Rational(1, 2));
  EXPECT_THROW(io::exact_point_from_json(json::parse(R"({"n":4,"a":["1"]})")), ValidationError);
}

TEST(Json, StructureTableRequiresIntegers) {
  qcoh::StructureTable t;
  const auto e = Permutation::identity(2);
  t[{e, e, e, {0}}] = Rational(1, 2);
  EXPECT_THROW(io::to_json(t), InternalError);
  t[{e, e, e, {0}}] = 1;
  EXPECT_EQ(io::to_json(t).dump(), R"([{"d":[0],"u":[1,2],"v":[1,2],"value":1,"w":[1,2]}])");
}

TEST(Parse, Lists) {
  EXPECT_EQ(io::parse_int_list("1,2, 3"), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(io::parse_int_list("[2,1]"), (std::vector<int>{2, 1}));
  EXPECT_TRUE(io::parse_int_list("").empty());
  EXPECT_THROW(io::parse_int_list("1,,2"), ValidationError);
  EXPECT_THROW(io::parse_int_list("1,a"), ValidationError);
  EXPECT_EQ(io::parse_double_list("0.5,1/4"), (std::vector<double>{0.5, 0.25}));
  EXPECT_THROW(io::parse_double_list("inf"), ValidationError);
  EXPECT_THROW(io::parse_permutation("1,2", 3), ValidationError);
  const auto x = io::parse_point("2,1/3");
  EXPECT_EQ(x.n, 3);
  EXPECT_EQ(x.a[1], Rational(1, 3));
}
