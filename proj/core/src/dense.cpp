#include "qflag/dense.hpp"

#include <algorithm>

#include "qflag/errors.hpp"

namespace qflag::poly {

VarSpace::VarSpace(std::vector<Var> vars, std::vector<int> weights, std::vector<int> blocks)
    : vars_(std::move(vars)), weights_(std::move(weights)), blocks_(std::move(blocks)) {
  if (vars_.size() > static_cast<std::size_t>(kMaxVars))
    throw ValidationError("too many variables for a dense polynomial space");
  if (weights_.size() != vars_.size() || blocks_.size() != vars_.size())
    throw InternalError("VarSpace: inconsistent sizes");
  for (int b : blocks_) nblocks_ = std::max(nblocks_, b + 1);
}

int VarSpace::index(Var v) const {
  for (int i = 0; i < size(); ++i)
    if (vars_[i] == v) return i;
  return -1;
}

int VarSpace::wdeg(const Exps& e) const {
  int d = 0;
  for (int i = 0; i < size(); ++i) d += weights_[i] * e[i];
  return d;
}

int VarSpace::wdeg_block(const Exps& e, int b) const {
  int d = 0;
  for (int i = 0; i < size(); ++i)
    if (blocks_[i] == b) d += weights_[i] * e[i];
  return d;
}

bool VarSpace::greater(const Exps& a, const Exps& b) const {
  for (int blk = 0; blk < nblocks_; ++blk) {
    int da = 0, db = 0;
    for (int i = 0; i < size(); ++i)
      if (blocks_[i] == blk) {
        da += weights_[i] * a[i];
        db += weights_[i] * b[i];
      }
    if (da != db) return da > db;
    for (int i = size() - 1; i >= 0; --i)
      if (blocks_[i] == blk && a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

DensePoly::DensePoly(const VarSpace* space, const Rational& c) : DensePoly(space) {
  if (c != 0) terms_.emplace(Exps{}, c);
}

DensePoly DensePoly::variable(const VarSpace* space, int index, int e) {
  DensePoly p(space);
  Exps x{};
  x[index] = static_cast<std::uint8_t>(e);
  p.terms_.emplace(x, 1);
  return p;
}

DensePoly DensePoly::from_poly(const VarSpace* space, const Poly& p) {
  DensePoly r(space);
  for (auto& [m, c] : p.terms()) {
    Exps e{};
    for (auto& [v, k] : m.factors()) {
      int i = space->index(v);
      if (i < 0) throw ValidationError("variable " + v.name() + " not in this polynomial space");
      e[i] = static_cast<std::uint8_t>(k);
    }
    r.add_term(e, c);
  }
  return r;
}

Rational DensePoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DensePoly::add_term(const Exps& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void DensePoly::add_scaled(const DensePoly& other, const Rational& c, const Exps& shift) {
  if (c == 0) return;
  for (auto& [e, a] : other.terms_) add_term(exps_add(e, shift), a * c);
}

void DensePoly::add_scaled(const DensePoly& other, const Rational& c) {
  if (c == 0) return;
  for (auto& [e, a] : other.terms_) add_term(e, a * c);
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

DensePoly& DensePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  DensePoly r(a.space_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) r.add_term(exps_add(ea, eb), ca * cb);
  return r;
}

DensePoly DensePoly::pow(int e) const {
  DensePoly r(space_, 1), base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

DensePoly DensePoly::block_part(int b, int d) const {
  DensePoly r(space_);
  for (auto& [e, c] : terms_)
    if (space_->wdeg_block(e, b) == d) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

int DensePoly::max_block_degree(int b) const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, space_->wdeg_block(e, b));
  return d;
}

DensePoly DensePoly::derivative(int index) const {
  DensePoly r(space_);
  for (auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exps f = e;
    --f[index];
    r.add_term(f, c * e[index]);
  }
  return r;
}

DensePoly DensePoly::substitute(int index, const DensePoly& value) const {
  DensePoly r(space_);
  std::vector<DensePoly> powers{DensePoly(space_, 1)};
  for (auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[index]) powers.push_back(powers.back() * value);
    Exps rest = e;
    rest[index] = 0;
    r.add_scaled(powers[e[index]], c, rest);
  }
  return r;
}

Poly DensePoly::to_poly() const {
  Poly p;
  for (auto& [e, c] : terms_) {
    std::vector<std::pair<Var, int>> f;
    for (int i = 0; i < space_->size(); ++i)
      if (e[i]) f.emplace_back(space_->var(i), e[i]);
    p.add_term(Monomial::from_factors(std::move(f)), c);
  }
  return p;
}

Rational DensePoly::evaluate(const std::vector<Rational>& values) const {
  Rational s = 0;
  for (auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < space_->size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    s += t;
  }
  return s;
}

double DensePoly::evaluate(const std::vector<double>& values) const {
  double s = 0;
  for (auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < space_->size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    s += t;
  }
  return s;
}

}  // namespace qflag::poly
