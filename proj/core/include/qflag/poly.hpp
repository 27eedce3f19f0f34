#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qflag::poly {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& r);

// Variable families in canonical order x < sigma < q < lambda < E. The E
// family holds formal symbols E^{(j)}_i used before expansion in sigma and q.
enum class Family : int { X = 0, Sigma = 1, Q = 2, Lambda = 3, E = 4 };

// x_i carries a = i; sigma^{(j)}_i and E^{(j)}_i carry (a, b) = (j, i);
// q_j carries a = j.
struct Var {
  Family family = Family::X;
  int a = 0;
  int b = 0;

  static Var x(int i) { return {Family::X, i, 0}; }
  static Var sigma(int j, int i) { return {Family::Sigma, j, i}; }
  static Var q(int j) { return {Family::Q, j, 0}; }
  static Var lambda() { return {Family::Lambda, 0, 0}; }
  static Var E(int j, int i) { return {Family::E, j, i}; }

  std::string name() const;
  auto operator<=>(const Var&) const = default;
};

// Sorted (variable, exponent) pairs, exponents positive.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Var v, int e = 1);
  static Monomial from_factors(std::vector<std::pair<Var, int>> factors);

  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }
  int exponent(Var v) const;
  int degree() const;
  bool is_one() const { return factors_.empty(); }
  Monomial operator*(const Monomial& other) const;
  Monomial without(Var v) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<Var, int>> factors_;
};

// Exact polynomial over Q in indexed variables. No zero coefficients are stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(Var v, int e = 1);
  static Poly term(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial()); }
  int degree() const;
  std::set<Var> variables() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  Poly operator-() const;
  Poly pow(int e) const;

  void add_term(const Monomial& m, const Rational& c);

  // Replaces the listed variables; the rest stay symbolic.
  Poly substitute(const std::map<Var, Poly>& values) const;
  // Full evaluation; throws ValidationError when a variable has no value.
  Rational evaluate(const std::map<Var, Rational>& values) const;
  double evaluate(const std::map<Var, double>& values) const;
  Poly swap_vars(Var a, Var b) const;
  Poly derivative(Var v) const;

  std::string to_string() const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

// (f - s_i f) / (x_i - x_{i+1}).
Poly divided_difference(const Poly& f, int i);

inline std::ostream& operator<<(std::ostream& os, const Poly& v) { return os << v.to_string(); }

}  // namespace qflag::poly
