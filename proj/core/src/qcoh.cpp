#include "qflag/qcoh.hpp"

#include <algorithm>

#include "qflag/errors.hpp"

namespace qflag::qcoh {

using poly::DensePoly;
using poly::Var;

Expansion schubert_class(const Permutation& w) { return Expansion{{w, Poly(1)}}; }

Expansion add(const Expansion& a, const Expansion& b) {
  Expansion r = a;
  for (auto& [w, c] : b) {
    Poly s = r[w] + c;
    if (s.is_zero()) r.erase(w);
    else r[w] = std::move(s);
  }
  return r;
}

Expansion scale(const Expansion& a, const Poly& c) {
  Expansion r;
  for (auto& [w, v] : a) {
    Poly s = v * c;
    if (!s.is_zero()) r.emplace(w, std::move(s));
  }
  return r;
}

Poly classical_schubert(const Permutation& w) {
  static std::mutex mu;
  static std::map<Permutation, Poly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }
  const int n = w.size();
  Poly r;
  if (w == Permutation::longest(n)) {
    r = Poly(1);
    for (int i = 1; i < n; ++i) r *= Poly::var(Var::x(i), n - i);
  } else {
    int i = 1;
    while (w(i) > w(i + 1)) ++i;
    r = poly::divided_difference(classical_schubert(w * Permutation::simple(i, n)), i);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(w, r);
  return r;
}

Poly quantum_schubert(const Permutation& w, const ParabolicShape& p) {
  if (w.size() != p.n() || !weyl::in_WP(w, p)) throw ValidationError(w.to_string() + " is not in W^P for " + p.to_string());
  const Poly c = classical_schubert(w);
  const int d = w.length();
  std::vector<qsym::StandardMonomialIndex> cand;
  std::vector<Poly> e;
  for (auto& idx : qsym::standard_monomials(p))
    if (qsym::weighted_degree(idx) == d) {
      cand.push_back(idx);
      e.push_back(qsym::e_of(idx, p));
    }
  std::map<poly::Monomial, int> rows;
  for (auto& f : e)
    for (auto& [m, v] : f.terms()) rows.emplace(m, 0);
  for (auto& [m, v] : c.terms()) rows.emplace(m, 0);
  int r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  const int cols = static_cast<int>(cand.size());
  linalg::Matrix<Rational> a(r, cols + 1);
  for (int j = 0; j < cols; ++j)
    for (auto& [m, v] : e[j].terms()) a(rows[m], j) = v;
  for (auto& [m, v] : c.terms()) a(rows[m], cols) = v;
  auto piv = linalg::rref(a);
  if (static_cast<int>(piv.size()) != cols || (!piv.empty() && piv.back() == cols))
    throw InternalError("classical Schubert polynomial is not a unique combination of standard monomials");
  Poly out;
  for (int j = 0; j < cols; ++j) out += qsym::E_symbol_of(cand[j]) * a(j, cols);
  return out;
}

// ---------------------------------------------------------------------------

QuantumRing::QuantumRing(const ParabolicShape& p)
    : p_(p), pres_(&qsym::presentation(p)), basis_(weyl::min_coset_reps(p)) {
  std::vector<DensePoly> nf;
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    index_.emplace(basis_[t], static_cast<int>(t));
    C_.push_back(qcoh::quantum_schubert(basis_[t], p));
    nf.push_back(pres_->normal_form(qsym::expand_E_symbols(C_.back(), p)));
  }
  expander_ = std::make_unique<qsym::BasisExpander>(*pres_, std::move(nf));
}

int QuantumRing::index_of(const Permutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw ValidationError(w.to_string() + " is not in W^P for " + p_.to_string());
  return it->second;
}

Expansion QuantumRing::to_schubert(const DensePoly& nf) const {
  auto coeffs = expander_->expand(nf);
  Expansion r;
  for (std::size_t t = 0; t < coeffs.size(); ++t)
    if (!coeffs[t].is_zero()) r.emplace(basis_[t], coeffs[t].to_poly());
  return r;
}

Expansion QuantumRing::reduce(const Poly& f) const {
  return to_schubert(pres_->normal_form(qsym::expand_E_symbols(f, p_)));
}

DensePoly QuantumRing::representative(const Expansion& a) const {
  DensePoly r(pres_->space());
  for (auto& [w, c] : a) r += pres_->dense(c) * expander_->element(index_of(w));
  return r;
}

Expansion QuantumRing::multiply(const Expansion& a, const Expansion& b) const {
  return to_schubert(pres_->groebner().reduce(representative(a) * representative(b)));
}

Expansion QuantumRing::multiply(const Permutation& u, const Permutation& v) const {
  return multiply(schubert_class(u), schubert_class(v));
}

PolyMatrix QuantumRing::operator_of(const Expansion& a) const {
  const int n = static_cast<int>(basis_.size());
  PolyMatrix m(n, n);
  const DensePoly rep = representative(a);
  for (int v = 0; v < n; ++v) {
    auto col = to_schubert(pres_->groebner().reduce(rep * expander_->element(v)));
    for (auto& [w, c] : col) m(index_of(w), v) = c;
  }
  return m;
}

const PolyMatrix& QuantumRing::sigma_operator() const {
  std::call_once(sigma_once_, [&] {
    Expansion s;
    for (auto& w : basis_) s.emplace(w, Poly(1));
    sigma_op_ = operator_of(s);
  });
  return sigma_op_;
}

const PolyMatrix& QuantumRing::class_operator(const Permutation& w) const {
  index_of(w);
  std::lock_guard<std::mutex> lock(class_mu_);
  auto& slot = class_ops_[w];
  if (!slot) slot = std::make_unique<PolyMatrix>(operator_of(schubert_class(w)));
  return *slot;
}

const QuantumRing& ring(const ParabolicShape& p) {
  static std::mutex mu;
  static std::map<ParabolicShape, std::unique_ptr<QuantumRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = std::make_unique<QuantumRing>(p);
  return *slot;
}

// ---------------------------------------------------------------------------

Expansion multiply(const Expansion& a, const Expansion& b, const ParabolicShape& p) {
  return ring(p).multiply(a, b);
}

Expansion chevalley(int j, const Permutation& w, const ParabolicShape& p) {
  if (j < 1 || j > p.k()) throw ValidationError("chevalley: j out of range");
  if (w.size() != p.n() || !weyl::in_WP(w, p)) throw ValidationError(w.to_string() + " is not in W^P");
  const int n = p.n(), nj = p.nj(j), len = w.length();
  Expansion r;
  for (int h = 1; h <= nj; ++h)
    for (int l = nj; l <= n - 1; ++l) {
      Permutation v = w * weyl::reflection(h, l, n);
      if (v.length() == len + 1 && weyl::in_WP(v, p)) r = add(r, schubert_class(v));
    }
  for (int h = 1; h <= j; ++h)
    for (int l = j; l <= p.k(); ++l) {
      Permutation t = weyl::tau(h, l, p);
      Permutation v = w * t;
      if (v.length() != len - t.length()) continue;
      if (!weyl::in_WP(v, p)) throw InternalError("quantum Chevalley term outside W^P");
      Poly q(1);
      for (int m = h; m <= l; ++m) q *= Poly::var(Var::q(m));
      r = add(r, scale(schubert_class(v), q));
    }
  return r;
}

Poly pairing(const Expansion& a, const Expansion& b, const ParabolicShape& p) {
  auto prod = multiply(a, b, p);
  auto it = prod.find(weyl::longest_min_rep(p));
  return it == prod.end() ? Poly() : it->second;
}

Expansion quantum_euler(const ParabolicShape& p) {
  const QuantumRing& R = ring(p);
  Expansion r;
  for (auto& w : R.basis()) r = add(r, R.multiply(w, weyl::pd(w, p)));
  return r;
}

Expansion jacobian_class(const ParabolicShape& p) {
  const QuantumRing& R = ring(p);
  const auto& pres = R.presentation();
  const int n = p.n();
  std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jac[i][j] = pres.E(p.k() + 1, i + 1).derivative(j).to_poly();
  return R.reduce(linalg::expansion_determinant(jac));
}

bool jacobian_check(const ParabolicShape& p) { return jacobian_class(p) == quantum_euler(p); }

Poly giambelli_grassmannian(const weyl::Shape& lambda, int d, int n) {
  if (d < 1 || d >= n) throw ValidationError("giambelli: need 1 <= d < n");
  if (static_cast<int>(lambda.size()) > d) throw ValidationError("shape has more than d parts");
  for (int v : lambda)
    if (v < 0 || v > n - d) throw ValidationError("shape does not fit the box");
  const int c = n - d;
  weyl::Shape conj = weyl::conjugate(lambda);
  conj.resize(c, 0);
  auto esym = [&](int j, int i) {
    if (i < 0 || i > j) return Poly();
    if (i == 0) return Poly(1);
    return Poly::var(Var::E(j, i));
  };
  std::vector<std::vector<Poly>> m(c, std::vector<Poly>(c));
  for (int i = 1; i <= c; ++i)
    for (int j = 1; j <= c; ++j) m[i - 1][j - 1] = esym(d + j - 1, conj[i - 1] + j - i);
  return linalg::expansion_determinant(m);
}

std::vector<int> q_exponents(const poly::Monomial& m, int k) {
  std::vector<int> d(k, 0);
  for (auto& [v, e] : m.factors())
    if (v.family == poly::Family::Q) d[v.a - 1] = e;
  return d;
}

StructureTable structure_table(const ParabolicShape& p) {
  const QuantumRing& R = ring(p);
  StructureTable t;
  const auto& b = R.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      auto prod = R.multiply(b[i], b[j]);
      for (auto& [w, c] : prod)
        for (auto& [m, v] : c.terms()) {
          auto d = q_exponents(m, p.k());
          t[{b[i], b[j], w, d}] = v;
          t[{b[j], b[i], w, d}] = v;
        }
    }
  return t;
}

bool is_graded(const Expansion& a, int degree, const ParabolicShape& p) {
  for (auto& [w, c] : a)
    for (auto& [m, v] : c.terms()) {
      int deg = w.length();
      auto d = q_exponents(m, p.k());
      for (int j = 1; j <= p.k(); ++j) deg += d[j - 1] * p.q_degree(j);
      if (deg != degree) return false;
    }
  return true;
}

}  // namespace qflag::qcoh
