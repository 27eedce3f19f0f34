#include "qflag/qsym.hpp"

#include <algorithm>

#include "qflag/errors.hpp"

namespace qflag::qsym {

namespace {

// Partitions with at most `rows` nonzero parts, each at most `max_part`.
void partitions_in_box(int rows, int max_part, Shape& cur, std::vector<Shape>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == rows) return;
  const int cap = cur.empty() ? max_part : cur.back();
  for (int v = 1; v <= cap; ++v) {
    cur.push_back(v);
    partitions_in_box(rows, max_part, cur, out);
    cur.pop_back();
  }
}

int sign_exponent(int l, const ParabolicShape& p) { return p.nj(l) - p.nj(l - 1) + 1; }

}  // namespace

Poly classical_e_range(int i, int first, int last) {
  const int m = last - first + 1;
  if (i < 0 || i > std::max(m, 0)) return Poly();
  if (i == 0) return Poly(1);
  // Coefficients of prod (1 + x_j t).
  std::vector<Poly> c(m + 1);
  c[0] = Poly(1);
  for (int j = first; j <= last; ++j) {
    const Poly x = Poly::var(Var::x(j));
    for (int d = j - first + 1; d >= 1; --d) c[d] += c[d - 1] * x;
  }
  return c[i];
}

Poly classical_e(int i, int m) { return classical_e_range(i, 1, m); }

Poly quantum_E(int l, int i, const ParabolicShape& p) {
  if (l < -1 || l > p.k() + 1) throw ValidationError("quantum_E: superscript out of range");
  if (l <= 0) return (l == 0 && i == 0) ? Poly(1) : Poly();
  if (i < 0 || i > p.nj(l)) return Poly();
  Poly r;
  const int m = p.block(l);
  for (int a = 0; a <= std::min(i, m); ++a) {
    Poly prev = quantum_E(l - 1, i - a, p);
    if (prev.is_zero()) continue;
    r += a == 0 ? prev : Poly::var(Var::sigma(l, a)) * prev;
  }
  if (l >= 2) {
    Poly lower = quantum_E(l - 2, i - p.nj(l) + p.nj(l - 2), p);
    if (!lower.is_zero()) {
      const Rational s = sign_exponent(l, p) % 2 == 0 ? 1 : -1;
      r += Poly::var(Var::q(l - 1)) * lower * s;
    }
  }
  return r;
}

Poly classical_limit(const Poly& f, const ParabolicShape& p) {
  std::map<Var, Poly> sub;
  for (const Var& v : f.variables()) {
    if (v.family == poly::Family::Sigma) {
      sub[v] = classical_e_range(v.b, p.nj(v.a - 1) + 1, p.nj(v.a));
    } else if (v.family == poly::Family::Q) {
      sub[v] = Poly();
    }
  }
  return f.substitute(sub);
}

std::vector<StandardMonomialIndex> standard_monomials(const ParabolicShape& p) {
  std::vector<StandardMonomialIndex> out{StandardMonomialIndex{}};
  for (int j = 1; j <= p.k(); ++j) {
    std::vector<Shape> parts;
    Shape cur;
    partitions_in_box(p.nj(j + 1) - p.nj(j), p.nj(j), cur, parts);
    std::vector<StandardMonomialIndex> next;
    for (auto& idx : out)
      for (auto& lam : parts) {
        StandardMonomialIndex e = idx;
        e.lambdas.push_back(lam);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = weighted_degree(a), db = weighted_degree(b);
    return da != db ? da < db : a < b;
  });
  return out;
}

int weighted_degree(const StandardMonomialIndex& idx) {
  int d = 0;
  for (auto& lam : idx.lambdas)
    for (int v : lam) d += v;
  return d;
}

Poly E_symbol_of(const StandardMonomialIndex& idx) {
  std::vector<std::pair<Var, int>> f;
  for (std::size_t j = 0; j < idx.lambdas.size(); ++j)
    for (int v : idx.lambdas[j]) {
      const Var e = Var::E(static_cast<int>(j) + 1, v);
      auto it = std::find_if(f.begin(), f.end(), [&](auto& pr) { return pr.first == e; });
      if (it == f.end()) f.emplace_back(e, 1);
      else ++it->second;
    }
  return Poly::term(poly::Monomial::from_factors(std::move(f)), 1);
}

Poly E_of(const StandardMonomialIndex& idx, const ParabolicShape& p) {
  Poly r(1);
  for (std::size_t j = 0; j < idx.lambdas.size(); ++j)
    for (int v : idx.lambdas[j]) r *= quantum_E(static_cast<int>(j) + 1, v, p);
  return r;
}

Poly e_of(const StandardMonomialIndex& idx, const ParabolicShape& p) {
  Poly r(1);
  for (std::size_t j = 0; j < idx.lambdas.size(); ++j)
    for (int v : idx.lambdas[j]) r *= classical_e(v, p.nj(static_cast<int>(j) + 1));
  return r;
}

Poly expand_E_symbols(const Poly& f, const ParabolicShape& p) {
  std::map<Var, Poly> sub;
  for (const Var& v : f.variables())
    if (v.family == poly::Family::E) sub[v] = quantum_E(v.a, v.b, p);
  return sub.empty() ? f : f.substitute(sub);
}

Poly standard_part(const StraightenedForm& s) {
  Poly r;
  for (auto& [idx, c] : s.standard) r += E_symbol_of(idx) * c;
  return r;
}

bool verify_straightened(const Poly& f, const StraightenedForm& s, const ParabolicShape& p) {
  Poly diff = expand_E_symbols(standard_part(s), p) - expand_E_symbols(f, p);
  for (auto& [cof, i] : s.ideal_witness)
    diff += expand_E_symbols(cof, p) * quantum_E(p.k() + 1, i, p);
  return diff.is_zero();
}

namespace {

// E-symbol with the boundary conventions; n_j = j on the full flag.
Poly esym(int j, int i, int n) {
  if (j < 0 || i < 0 || i > j || j > n) return Poly();
  if (i == 0) return Poly(1);
  return Poly::var(Var::E(j, i));
}

// Splits a monomial of E-symbols and q into (index, q-monomial) for shape p.
StandardMonomialIndex index_of(const poly::Monomial& m, const ParabolicShape& p, poly::Monomial& qpart) {
  StandardMonomialIndex idx;
  idx.lambdas.assign(p.k(), Shape{});
  std::vector<std::pair<Var, int>> qf;
  for (auto& [v, e] : m.factors()) {
    if (v.family == poly::Family::E) {
      for (int t = 0; t < e; ++t) idx.lambdas[v.a - 1].push_back(v.b);
    } else {
      qf.emplace_back(v, e);
    }
  }
  for (auto& lam : idx.lambdas) std::sort(lam.rbegin(), lam.rend());
  qpart = poly::Monomial::from_factors(std::move(qf));
  return idx;
}

}  // namespace

StraightenedForm straighten_rewrite(const Poly& f, const ParabolicShape& p) {
  if (!p.is_full_flag()) throw ValidationError("the quadratic rewrite applies to full flags only");
  const int n = p.n();
  for (const Var& v : f.variables())
    if (v.family != poly::Family::E && v.family != poly::Family::Q)
      throw ValidationError("straighten expects a polynomial in E-symbols and q, found " + v.name());

  // Normalize boundary symbols first.
  Poly work;
  for (auto& [m, c] : f.terms()) {
    Poly t(c);
    for (auto& [v, e] : m.factors())
      t *= (v.family == poly::Family::E ? esym(v.a, v.b, n) : Poly::var(v)).pow(e);
    work += t;
  }

  std::vector<Poly> cof(n + 1);
  Poly standard;
  long guard = 0;
  while (!work.is_zero()) {
    if (++guard > 5'000'000) throw InternalError("straighten: rewrite bound exceeded");
    auto it = work.terms().begin();
    const poly::Monomial m = it->first;
    const Rational c = it->second;
    work.add_term(m, -c);

    int top = -1;
    for (auto& [v, e] : m.factors())
      if (v.family == poly::Family::E && v.a == n) top = v.b;
    if (top > 0) {
      const Var v = Var::E(n, top);
      poly::Monomial rest = poly::Monomial::from_factors([&] {
        auto fs = m.factors();
        for (auto& pr : fs)
          if (pr.first == v) --pr.second;
        fs.erase(std::remove_if(fs.begin(), fs.end(), [](auto& pr) { return pr.second == 0; }), fs.end());
        return fs;
      }());
      cof[top].add_term(rest, c);
      continue;
    }
    // Largest superscript carrying two or more factors.
    int j = -1;
    std::vector<int> idxs;
    for (int s = n - 1; s >= 1 && j < 0; --s) {
      std::vector<int> here;
      for (auto& [v, e] : m.factors())
        if (v.family == poly::Family::E && v.a == s)
          for (int t = 0; t < e; ++t) here.push_back(v.b);
      if (here.size() >= 2) {
        j = s;
        idxs = here;
      }
    }
    if (j < 0) {
      standard.add_term(m, c);
      continue;
    }
    const int i = idxs[0], l = idxs[1];  // sorted ascending, i <= l
    std::vector<std::pair<Var, int>> fs = m.factors();
    for (int drop : {i, l})
      for (auto& pr : fs)
        if (pr.first == Var::E(j, drop) && pr.second > 0) {
          --pr.second;
          break;
        }
    fs.erase(std::remove_if(fs.begin(), fs.end(), [](auto& pr) { return pr.second == 0; }), fs.end());
    const Poly rest = Poly::term(poly::Monomial::from_factors(std::move(fs)), c);
    const Poly q = Poly::var(Var::q(j));
    Poly rhs = esym(j + 1, i, n) * esym(j, l, n) - esym(j, i - 1, n) * esym(j + 1, l + 1, n) +
               esym(j, i - 1, n) * esym(j, l + 1, n) +
               q * (esym(j, i - 1, n) * esym(j - 1, l - 1, n) - esym(j - 1, i - 2, n) * esym(j, l, n));
    work += rest * rhs;
  }

  StraightenedForm out;
  for (auto& [m, c] : standard.terms()) {
    poly::Monomial qpart;
    auto idx = index_of(m, p, qpart);
    out.standard[idx].add_term(qpart, c);
  }
  for (auto it = out.standard.begin(); it != out.standard.end();)
    it = it->second.is_zero() ? out.standard.erase(it) : std::next(it);
  for (int i = 1; i <= n; ++i)
    if (!cof[i].is_zero()) out.ideal_witness.emplace_back(cof[i], i);
  return out;
}

StraightenedForm straighten_groebner(const Poly& f, const ParabolicShape& p) {
  const Presentation& pres = presentation(p);
  const poly::Groebner& gb = pres.tracked_groebner();
  std::vector<DensePoly> cof;
  const DensePoly r = gb.reduce(pres.dense(expand_E_symbols(f, p)), cof);
  const BasisExpander& ex = pres.standard_expander();
  const auto coeffs = ex.expand(r);
  const auto idxs = standard_monomials(p);

  StraightenedForm out;
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t].is_zero()) continue;
    out.standard[idxs[t]] = coeffs[t].to_poly();
    // E_Lambda = NF(E_Lambda) + sum d_i E^{(k+1)}_i; move c * d_i into the witness.
    std::vector<DensePoly> d;
    gb.reduce(pres.dense(E_of(idxs[t], p)), d);
    for (std::size_t i = 0; i < cof.size(); ++i) cof[i] -= coeffs[t] * d[i];
  }
  for (std::size_t i = 0; i < cof.size(); ++i)
    if (!cof[i].is_zero()) out.ideal_witness.emplace_back(cof[i].to_poly(), static_cast<int>(i) + 1);
  return out;
}

StraightenedForm straighten(const Poly& f, const ParabolicShape& p) {
  return p.is_full_flag() ? straighten_rewrite(f, p) : straighten_groebner(f, p);
}

PolyMatrix ask_matrix(int l, const ParabolicShape& p) {
  if (l < 1 || l > p.k() + 1) throw ValidationError("ask_matrix: l out of range");
  const int size = p.nj(l);
  PolyMatrix a(size, std::vector<Poly>(size));
  for (int i = 1; i < size; ++i) a[i][i - 1] = Poly(1);
  for (int i = 1; i <= p.nj(1); ++i) a[0][i - 1] = -Poly::var(Var::sigma(1, i));
  for (int j = 2; j <= l; ++j) {
    const int m = p.block(j), col = p.nj(j) - 1;
    for (int r = 0; r < m; ++r) a[p.nj(j - 1) + r][col] = -Poly::var(Var::sigma(j, m - r));
  }
  for (int m = 1; m + 1 <= l; ++m) {
    const Rational s = (p.nj(m + 1) - p.nj(m)) % 2 == 0 ? 1 : -1;
    a[p.nj(m - 1)][p.nj(m + 1) - 1] += Poly::var(Var::q(m)) * s;
  }
  return a;
}

Poly characteristic_polynomial(const PolyMatrix& a) {
  const int n = static_cast<int>(a.size());
  PolyMatrix m(n, std::vector<Poly>(n));
  const Poly lam = Poly::var(Var::lambda());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = (i == j ? lam : Poly()) - a[i][j];
  return linalg::expansion_determinant(m);
}

bool charpoly_check(int l, const ParabolicShape& p) {
  const Poly cp = characteristic_polynomial(ask_matrix(l, p));
  const int size = p.nj(l);
  Poly expect;
  for (int i = 0; i <= size; ++i)
    expect += quantum_E(l, i, p) * Poly::var(Var::lambda(), size - i);
  return cp == expect;
}

// ---------------------------------------------------------------------------

Presentation::Presentation(const ParabolicShape& p)
    : p_(p),
      space_([&] {
        std::vector<Var> vars;
        std::vector<int> w, b;
        for (int j = 1; j <= p.k() + 1; ++j)
          for (int i = 1; i <= p.block(j); ++i) {
            vars.push_back(Var::sigma(j, i));
            w.push_back(i);
            b.push_back(0);
          }
        for (int j = 1; j <= p.k(); ++j) {
          vars.push_back(Var::q(j));
          w.push_back(p.q_degree(j));
          b.push_back(1);
        }
        return poly::VarSpace(std::move(vars), std::move(w), std::move(b));
      }()),
      zero_(&space_) {
  const int K = p.k();
  E_.resize(K + 3);
  E_[1].push_back(DensePoly(&space_, 1));  // l = 0
  for (int l = 1; l <= K + 1; ++l) {
    auto& row = E_[l + 1];
    for (int i = 0; i <= p.nj(l); ++i) {
      DensePoly r(&space_);
      for (int a = 0; a <= std::min(i, p.block(l)); ++a) {
        const DensePoly& prev = E(l - 1, i - a);
        if (prev.is_zero()) continue;
        if (a == 0) r += prev;
        else r += DensePoly::variable(&space_, eps_index(l, a)) * prev;
      }
      if (l >= 2) {
        const DensePoly& lower = E(l - 2, i - p.nj(l) + p.nj(l - 2));
        if (!lower.is_zero()) {
          const Rational s = sign_exponent(l, p) % 2 == 0 ? 1 : -1;
          r.add_scaled(DensePoly::variable(&space_, q_index(l - 1)) * lower, s);
        }
      }
      row.push_back(std::move(r));
    }
  }
  std::vector<DensePoly> gens;
  for (int i = 1; i <= p.n(); ++i) gens.push_back(E(K + 1, i));
  gb_ = std::make_unique<poly::Groebner>(&space_, std::move(gens), false);
  for (auto& g : gb_->basis()) {
    Exps eps, q;
    split(g.lead_exps(), eps, q);
    if (q != Exps{}) throw InternalError("Groebner basis has a leading term involving q");
  }
  int top = weyl::longest_min_rep(p).length();
  standard_ = gb_->standard_monomials(0, top);
  if (standard_.size() != weyl::min_coset_reps(p).size())
    throw InternalError("quotient rank differs from |W^P| for " + p.to_string());
}

Presentation::~Presentation() = default;

void Presentation::split(const Exps& e, Exps& eps, Exps& q) const {
  eps = Exps{};
  q = Exps{};
  for (int i = 0; i < space_.size(); ++i) (space_.block(i) == 0 ? eps : q)[i] = e[i];
}

const DensePoly& Presentation::E(int l, int i) const {
  if (l < 0 || l + 1 >= static_cast<int>(E_.size())) return zero_;
  const auto& row = E_[l + 1];
  if (i < 0 || i >= static_cast<int>(row.size())) return zero_;
  return row[i];
}

const poly::Groebner& Presentation::tracked_groebner() const {
  std::call_once(tracked_once_, [&] {
    std::vector<DensePoly> gens;
    for (int i = 1; i <= p_.n(); ++i) gens.push_back(E(p_.k() + 1, i));
    tracked_ = std::make_unique<poly::Groebner>(&space_, std::move(gens), true);
  });
  return *tracked_;
}

DensePoly Presentation::dense(const Poly& f) const { return DensePoly::from_poly(&space_, f); }

const BasisExpander& Presentation::standard_expander() const {
  std::call_once(expander_once_, [&] {
    std::vector<DensePoly> nf;
    for (auto& idx : standard_monomials(p_)) nf.push_back(normal_form(E_of(idx, p_)));
    expander_ = std::make_unique<BasisExpander>(*this, std::move(nf));
  });
  return *expander_;
}

const Presentation& presentation(const ParabolicShape& p) {
  static std::mutex mu;
  static std::map<ParabolicShape, std::unique_ptr<Presentation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = std::make_unique<Presentation>(p);
  return *slot;
}

// ---------------------------------------------------------------------------

BasisExpander::BasisExpander(const Presentation& pres, std::vector<DensePoly> nf_basis)
    : pres_(&pres), basis_(std::move(nf_basis)) {
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    if (basis_[t].is_zero()) throw InternalError("basis element reduces to zero");
    int d = basis_[t].max_block_degree(0);
    auto [it, fresh] = degrees_.try_emplace(d, Degree{{}, std::map<Exps, int, poly::ExpsGreater>(poly::ExpsGreater{pres.space()}), {}});
    (void)fresh;
    it->second.members.push_back(static_cast<int>(t));
  }
  for (auto& e : pres.standard_exps()) {
    auto it = degrees_.find(pres.eps_degree(e));
    if (it == degrees_.end()) throw InternalError("standard monomial in a degree with no basis element");
    const int pos = static_cast<int>(it->second.position.size());
    it->second.position.emplace(e, pos);
  }
  for (auto& [d, deg] : degrees_) {
    const int m = static_cast<int>(deg.members.size());
    if (static_cast<int>(deg.position.size()) != m)
      throw InternalError("basis size mismatch in degree " + std::to_string(d));
    linalg::Matrix<Rational> s(m, m);
    for (int c = 0; c < m; ++c)
      for (auto& [e, r] : deg.position) s(r, c) = basis_[deg.members[c]].coeff(e);
    auto inv = linalg::inverse(s);
    if (!inv) throw InternalError("classical parts of the basis are dependent in degree " + std::to_string(d));
    deg.inverse = std::move(*inv);
  }
}

std::vector<DensePoly> BasisExpander::expand(const DensePoly& nf) const {
  const poly::VarSpace* space = pres_->space();
  std::vector<DensePoly> out(basis_.size(), DensePoly(space));
  DensePoly work = nf;
  int last = 1 << 30;
  while (!work.is_zero()) {
    const int d = work.max_block_degree(0);
    if (d >= last) throw InternalError("basis expansion did not lower the degree");
    last = d;
    auto dit = degrees_.find(d);
    if (dit == degrees_.end()) throw InternalError("element is not a normal form");
    const Degree& deg = dit->second;
    // Group the degree-d part by its q monomial.
    std::map<Exps, std::vector<Rational>> groups;
    for (auto& [e, c] : work.terms()) {
      if (pres_->eps_degree(e) != d) continue;
      Exps eps, q;
      pres_->split(e, eps, q);
      auto pit = deg.position.find(eps);
      if (pit == deg.position.end()) throw InternalError("element is not a normal form");
      auto& v = groups[q];
      v.resize(deg.position.size());
      v[pit->second] = c;
    }
    for (auto& [q, coords] : groups) {
      const auto coeffs = deg.inverse.apply(coords);
      for (std::size_t c = 0; c < coeffs.size(); ++c) {
        if (coeffs[c] == 0) continue;
        const int t = deg.members[c];
        out[t].add_term(q, coeffs[c]);
        work.add_scaled(basis_[t], -coeffs[c], q);
      }
    }
  }
  return out;
}

}  // namespace qflag::qsym
