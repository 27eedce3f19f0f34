#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "qflag/poly.hpp"

namespace qflag::poly {

constexpr int kMaxVars = 16;
using Exps = std::array<std::uint8_t, kMaxVars>;

// Ordered list of variables with weights and an elimination block for each.
// Monomials compare block by block (block 0 dominates); inside a block by
// weighted degree, ties broken reverse-lexicographically.
class VarSpace {
 public:
  VarSpace(std::vector<Var> vars, std::vector<int> weights, std::vector<int> blocks);

  int size() const { return static_cast<int>(vars_.size()); }
  const Var& var(int i) const { return vars_[i]; }
  int index(Var v) const;
  int weight(int i) const { return weights_[i]; }
  int block(int i) const { return blocks_[i]; }

  int wdeg(const Exps& e) const;
  int wdeg_block(const Exps& e, int b) const;
  bool greater(const Exps& a, const Exps& b) const;

 private:
  std::vector<Var> vars_;
  std::vector<int> weights_;
  std::vector<int> blocks_;
  int nblocks_ = 1;
};

inline bool divides(const Exps& a, const Exps& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Exps exps_add(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return r;
}
inline Exps exps_sub(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint8_t>(a[i] - b[i]);
  return r;
}
inline Exps exps_lcm(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}
inline bool coprime(const Exps& a, const Exps& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

struct ExpsGreater {
  const VarSpace* space;
  bool operator()(const Exps& a, const Exps& b) const { return space->greater(a, b); }
};

// Polynomial over a fixed VarSpace, terms kept in decreasing monomial order.
// The space must outlive every polynomial built on it.
class DensePoly {
 public:
  using Terms = std::map<Exps, Rational, ExpsGreater>;

  explicit DensePoly(const VarSpace* space) : space_(space), terms_(ExpsGreater{space}) {}
  DensePoly(const VarSpace* space, const Rational& c);
  static DensePoly variable(const VarSpace* space, int index, int e = 1);
  static DensePoly from_poly(const VarSpace* space, const Poly& p);

  const VarSpace* space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Exps& lead_exps() const { return terms_.begin()->first; }
  const Rational& lead_coeff() const { return terms_.begin()->second; }
  Rational coeff(const Exps& e) const;

  void add_term(const Exps& e, const Rational& c);
  // this += c * x^shift * other
  void add_scaled(const DensePoly& other, const Rational& c, const Exps& shift);
  void add_scaled(const DensePoly& other, const Rational& c);

  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);
  DensePoly& operator*=(const Rational& c);
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(DensePoly a, const Rational& c) { return a *= c; }
  DensePoly pow(int e) const;

  // Keeps only the terms whose block-b weighted degree equals d.
  DensePoly block_part(int b, int d) const;
  // Largest block-b weighted degree among the terms, -1 for zero.
  int max_block_degree(int b) const;
  DensePoly derivative(int index) const;
  // Substitutes a polynomial for variable `index`.
  DensePoly substitute(int index, const DensePoly& value) const;

  Poly to_poly() const;
  Rational evaluate(const std::vector<Rational>& values) const;
  double evaluate(const std::vector<double>& values) const;

  bool operator==(const DensePoly& o) const { return terms_ == o.terms_; }

 private:
  const VarSpace* space_;
  Terms terms_;
};

}  // namespace qflag::poly
