#include "qflag/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qflag/errors.hpp"

namespace qflag::poly {

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw ValidationError("empty rational");
  auto dot = t.find('.');
  auto exp = t.find_first_of("eE");
  if (dot != std::string::npos || exp != std::string::npos) {
    // Decimal literal: read it exactly as written.
    std::string mant = exp == std::string::npos ? t : t.substr(0, exp);
    long e10 = exp == std::string::npos ? 0 : std::stol(t.substr(exp + 1));
    bool neg = !mant.empty() && mant[0] == '-';
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) mant.erase(0, 1);
    auto d = mant.find('.');
    std::string digits = mant;
    if (d != std::string::npos) {
      e10 -= static_cast<long>(mant.size() - d - 1);
      digits = mant.substr(0, d) + mant.substr(d + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("bad number: " + s);
    mpz_class num(digits, 10), ten(10), scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(e10)));
    Rational r = e10 >= 0 ? Rational(num * scale) : Rational(num, scale);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  Rational r;
  if (r.set_str(t, 10) != 0) throw ValidationError("bad rational: " + s);
  if (r.get_den() == 0) throw ValidationError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(10); }

std::string Var::name() const {
  switch (family) {
    case Family::X: return "x" + std::to_string(a);
    case Family::Sigma: return "sigma" + std::to_string(a) + "_" + std::to_string(b);
    case Family::Q: return "q" + std::to_string(a);
    case Family::Lambda: return "lambda";
    case Family::E: return "E" + std::to_string(a) + "_" + std::to_string(b);
  }
  return "?";
}

Monomial::Monomial(Var v, int e) {
  if (e > 0) factors_.emplace_back(v, e);
}

Monomial Monomial::from_factors(std::vector<std::pair<Var, int>> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (auto& [v, e] : factors) {
    if (e < 0) throw ValidationError("negative exponent");
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
  }
  return m;
}

int Monomial::exponent(Var v) const {
  for (auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return m;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (auto& f : factors_)
    if (f.first != v) m.factors_.push_back(f);
  return m;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Poly Poly::var(Var v, int e) { return term(Monomial(v, e), 1); }

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<Var> Poly::variables() const {
  std::set<Var> vs;
  for (auto& [m, c] : terms_)
    for (auto& f : m.factors()) vs.insert(f.first);
  return vs;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw ValidationError("negative power");
  Poly r(1), base(*this);
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Poly Poly::substitute(const std::map<Var, Poly>& values) const {
  Poly r;
  std::map<std::pair<Var, int>, Poly> powers;
  for (auto& [m, c] : terms_) {
    Poly t(c);
    std::vector<std::pair<Var, int>> kept;
    for (auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
      t *= pit->second;
    }
    if (!kept.empty()) t *= Poly::term(Monomial::from_factors(kept), 1);
    r += t;
  }
  return r;
}

namespace {
template <class T>
T eval_impl(const Poly& p, const std::map<Var, T>& values) {
  T sum = 0;
  for (auto& [m, c] : p.terms()) {
    T t;
    if constexpr (std::is_same_v<T, double>)
      t = c.get_d();
    else
      t = c;
    for (auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw ValidationError("no value for variable " + v.name());
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    sum += t;
  }
  return sum;
}
}  // namespace

Rational Poly::evaluate(const std::map<Var, Rational>& values) const {
  return eval_impl<Rational>(*this, values);
}

double Poly::evaluate(const std::map<Var, double>& values) const {
  return eval_impl<double>(*this, values);
}

Poly Poly::swap_vars(Var a, Var b) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    auto f = m.factors();
    for (auto& [v, e] : f) {
      if (v == a)
        v = b;
      else if (v == b)
        v = a;
    }
    r.add_term(Monomial::from_factors(std::move(f)), c);
  }
  return r;
}

Poly Poly::derivative(Var v) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    auto f = m.without(v).factors();
    f.emplace_back(v, e - 1);
    r.add_term(Monomial::from_factors(std::move(f)), c * e);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = a == 1 && !m.is_one();
    if (!unit) os << a.get_str();
    bool star = !unit;
    for (auto& [v, e] : m.factors()) {
      os << (star ? "*" : "") << v.name();
      if (e > 1) os << '^' << e;
      star = true;
    }
    first = false;
  }
  return os.str();
}

Poly divided_difference(const Poly& f, int i) {
  const Var xi = Var::x(i), xj = Var::x(i + 1);
  Poly r;
  for (auto& [m, c] : f.terms()) {
    int a = m.exponent(xi), b = m.exponent(xj);
    if (a == b) continue;
    Monomial rest = m.without(xi).without(xj);
    int lo = std::min(a, b), hi = std::max(a, b);
    Rational sign = a > b ? 1 : -1;
    // (x_i^hi x_j^lo - x_i^lo x_j^hi)/(x_i - x_j) = (x_i x_j)^lo * h_{hi-lo-1}(x_i, x_j)
    for (int t = 0; t < hi - lo; ++t) {
      Monomial piece = rest * Monomial(xi, lo + hi - lo - 1 - t) * Monomial(xj, lo + t);
      r.add_term(piece, c * sign);
    }
  }
  return r;
}

}  // namespace qflag::poly
