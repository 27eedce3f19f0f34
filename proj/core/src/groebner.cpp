#include "qflag/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "qflag/errors.hpp"

namespace qflag::poly {

namespace {

int find_divisor(const std::vector<const DensePoly*>& by, const Exps& e) {
  for (std::size_t i = 0; i < by.size(); ++i)
    if (divides(by[i]->lead_exps(), e)) return static_cast<int>(i);
  return -1;
}

}  // namespace

Groebner::Groebner(const VarSpace* space, std::vector<DensePoly> generators, bool track_cofactors)
    : space_(space), ngens_(generators.size()), track_(track_cofactors) {
  run(std::move(generators));
}

void Groebner::reduce_element(Element& e, const std::vector<Element>& by) const {
  std::vector<const DensePoly*> lead;
  lead.reserve(by.size());
  for (auto& g : by) lead.push_back(&g.p);
  DensePoly work = std::move(e.p);
  DensePoly rem(space_);
  while (!work.is_zero()) {
    const Exps lt = work.lead_exps();
    const Rational lc = work.lead_coeff();
    int i = find_divisor(lead, lt);
    if (i < 0) {
      rem.add_term(lt, lc);
      work.add_term(lt, -lc);
      continue;
    }
    const Element& g = by[i];
    const Exps shift = exps_sub(lt, g.p.lead_exps());
    const Rational f = lc / g.p.lead_coeff();
    work.add_scaled(g.p, -f, shift);
    if (track_)
      for (std::size_t r = 0; r < ngens_; ++r) e.rep[r].add_scaled(g.rep[r], -f, shift);
  }
  e.p = std::move(rem);
}

void Groebner::run(std::vector<DensePoly> gens) {
  std::vector<Element> g;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Element e{std::move(gens[i]), {}};
    if (track_) {
      e.rep.assign(ngens_, DensePoly(space_));
      e.rep[i] = DensePoly(space_, 1);
    }
    reduce_element(e, g);
    if (e.p.is_zero()) continue;
    const Rational inv = 1 / e.p.lead_coeff();
    e.p *= inv;
    for (auto& r : e.rep) r *= inv;
    g.push_back(std::move(e));
  }

  // Pending pairs keyed by (weighted degree of lcm, i, j) for a deterministic normal strategy.
  using Key = std::tuple<int, int, int>;
  std::set<Key> queue;
  std::set<std::pair<int, int>> pending;
  auto push_pair = [&](int i, int j) {
    Exps l = exps_lcm(g[i].p.lead_exps(), g[j].p.lead_exps());
    queue.emplace(space_->wdeg(l), i, j);
    pending.emplace(i, j);
  };
  for (int j = 0; j < static_cast<int>(g.size()); ++j)
    for (int i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const Exps& li = g[i].p.lead_exps();
    const Exps& lj = g[j].p.lead_exps();
    if (coprime(li, lj)) continue;
    const Exps l = exps_lcm(li, lj);
    bool chain = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chain; ++k) {
      if (k == i || k == j || !divides(g[k].p.lead_exps(), l)) continue;
      auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(i, k)) && !pending.count(key(j, k))) chain = true;
    }
    if (chain) continue;

    Element s{DensePoly(space_), {}};
    const Exps si = exps_sub(l, li), sj = exps_sub(l, lj);
    s.p.add_scaled(g[i].p, 1, si);
    s.p.add_scaled(g[j].p, -1, sj);
    if (track_) {
      s.rep.assign(ngens_, DensePoly(space_));
      for (std::size_t r = 0; r < ngens_; ++r) {
        s.rep[r].add_scaled(g[i].rep[r], 1, si);
        s.rep[r].add_scaled(g[j].rep[r], -1, sj);
      }
    }
    reduce_element(s, g);
    if (s.p.is_zero()) continue;
    const Rational inv = 1 / s.p.lead_coeff();
    s.p *= inv;
    for (auto& r : s.rep) r *= inv;
    g.push_back(std::move(s));
    const int m = static_cast<int>(g.size()) - 1;
    for (int a = 0; a < m; ++a) push_pair(a, m);
  }

  // Minimalize, then interreduce tails.
  std::vector<Element> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const Exps& la = g[a].p.lead_exps();
      const Exps& lb = g[b].p.lead_exps();
      if (divides(lb, la) && (la != lb || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Element> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    Element e = minimal[a];
    const Exps lead = e.p.lead_exps();
    const Rational lc = e.p.lead_coeff();
    // Keep the leading term fixed and reduce only the tail.
    e.p.add_term(lead, -lc);
    reduce_element(e, others);
    e.p.add_term(lead, lc);
    minimal[a] = std::move(e);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Element& a, const Element& b) {
    return space_->greater(b.p.lead_exps(), a.p.lead_exps());
  });
  for (auto& e : minimal) {
    basis_.push_back(std::move(e.p));
    reps_.push_back(std::move(e.rep));
  }
}

DensePoly Groebner::reduce(const DensePoly& f) const {
  std::vector<const DensePoly*> lead;
  for (auto& b : basis_) lead.push_back(&b);
  DensePoly work = f;
  DensePoly rem(space_);
  while (!work.is_zero()) {
    const Exps lt = work.lead_exps();
    const Rational lc = work.lead_coeff();
    int i = find_divisor(lead, lt);
    if (i < 0) {
      rem.add_term(lt, lc);
      work.add_term(lt, -lc);
    } else {
      work.add_scaled(basis_[i], -lc / basis_[i].lead_coeff(), exps_sub(lt, basis_[i].lead_exps()));
    }
  }
  return rem;
}

DensePoly Groebner::reduce(const DensePoly& f, std::vector<DensePoly>& cofactors) const {
  if (!track_) throw InternalError("Groebner: cofactors requested without tracking");
  std::vector<const DensePoly*> lead;
  for (auto& b : basis_) lead.push_back(&b);
  cofactors.assign(ngens_, DensePoly(space_));
  DensePoly work = f;
  DensePoly rem(space_);
  while (!work.is_zero()) {
    const Exps lt = work.lead_exps();
    const Rational lc = work.lead_coeff();
    int i = find_divisor(lead, lt);
    if (i < 0) {
      rem.add_term(lt, lc);
      work.add_term(lt, -lc);
      continue;
    }
    const Exps shift = exps_sub(lt, basis_[i].lead_exps());
    const Rational c = lc / basis_[i].lead_coeff();
    work.add_scaled(basis_[i], -c, shift);
    for (std::size_t r = 0; r < ngens_; ++r) cofactors[r].add_scaled(reps_[i][r], c, shift);
  }
  return rem;
}

bool Groebner::is_standard(const Exps& e) const {
  for (auto& b : basis_)
    if (divides(b.lead_exps(), e)) return false;
  return true;
}

std::vector<Exps> Groebner::standard_monomials(int block, int max_wdeg) const {
  std::vector<int> vars;
  for (int i = 0; i < space_->size(); ++i)
    if (space_->block(i) == block) vars.push_back(i);
  std::vector<Exps> out;
  Exps cur{};
  // Depth-first over exponents; standardness is inherited by divisors so we prune.
  auto rec = [&](auto&& self, std::size_t pos, int deg) -> void {
    if (pos == vars.size()) {
      out.push_back(cur);
      return;
    }
    const int v = vars[pos];
    for (int e = 0; deg + e * space_->weight(v) <= max_wdeg; ++e) {
      cur[v] = static_cast<std::uint8_t>(e);
      if (!is_standard(cur)) break;
      self(self, pos + 1, deg + e * space_->weight(v));
    }
    cur[v] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [&](const Exps& a, const Exps& b) { return space_->greater(a, b); });
  return out;
}

}  // namespace qflag::poly
