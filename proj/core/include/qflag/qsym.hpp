#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "qflag/dense.hpp"
#include "qflag/groebner.hpp"
#include "qflag/linalg.hpp"
#include "qflag/poly.hpp"
#include "qflag/weyl.hpp"

namespace qflag::qsym {

using poly::DensePoly;
using poly::Exps;
using poly::Poly;
using poly::Rational;
using poly::Var;
using weyl::ParabolicShape;
using weyl::Shape;

// e_i(x_1, ..., x_m); 1 for i = 0 and 0 outside 0..m.
Poly classical_e(int i, int m);
// e_i(x_first, ..., x_last).
Poly classical_e_range(int i, int first, int last);

// E^{(l)}_i as a polynomial in sigma and q, for -1 <= l <= k+1.
//
// E^{(l)}_i = sum_a sigma^{(l)}_a E^{(l-1)}_{i-a}
//             + (-1)^{n_l - n_{l-1} + 1} q_{l-1} E^{(l-2)}_{i - n_l + n_{l-2}},
// with E^{(0)}_0 = 1 and every other E^{(0)}, E^{(-1)} zero.
Poly quantum_E(int l, int i, const ParabolicShape& p);

// sigma^{(j)}_i -> e_i of the x variables in block j, q -> 0.
Poly classical_limit(const Poly& f, const ParabolicShape& p);

// Index of a standard monomial: lambdas[j-1] is the partition attached to
// superscript j, with at most n_{j+1} - n_j parts, each at most n_j.
struct StandardMonomialIndex {
  std::vector<Shape> lambdas;
  auto operator<=>(const StandardMonomialIndex&) const = default;
  bool operator==(const StandardMonomialIndex&) const = default;
};

std::vector<StandardMonomialIndex> standard_monomials(const ParabolicShape& p);
// Product of E^{(j)}_{lambda} symbols (family E).
Poly E_symbol_of(const StandardMonomialIndex& idx);
// Same product expanded in sigma and q.
Poly E_of(const StandardMonomialIndex& idx, const ParabolicShape& p);
// Classical counterpart e_Lambda in x.
Poly e_of(const StandardMonomialIndex& idx, const ParabolicShape& p);
int weighted_degree(const StandardMonomialIndex& idx);

// Replaces every E-symbol by quantum_E; other variables pass through.
Poly expand_E_symbols(const Poly& f, const ParabolicShape& p);

struct StraightenedForm {
  std::map<StandardMonomialIndex, Poly> standard;  // coefficients in q
  // (cofactor, i) meaning cofactor * E^{(k+1)}_i.
  std::vector<std::pair<Poly, int>> ideal_witness;
};

// Normal form modulo J = (E^{(k+1)}_1, ..., E^{(k+1)}_n). Full flags use the
// quadratic rewrite rule on E-symbols; other shapes reduce by a Groebner basis
// of J in the sigma variables (cofactors are then sigma polynomials).
StraightenedForm straighten(const Poly& f, const ParabolicShape& p);
StraightenedForm straighten_groebner(const Poly& f, const ParabolicShape& p);
// Full-flag rewrite; throws ValidationError for other shapes.
StraightenedForm straighten_rewrite(const Poly& f, const ParabolicShape& p);
// sum standard + sum cofactor * E^{(k+1)}_i - f == 0 after expansion.
bool verify_straightened(const Poly& f, const StraightenedForm& s, const ParabolicShape& p);
Poly standard_part(const StraightenedForm& s);

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix ask_matrix(int l, const ParabolicShape& p);
// det(lambda I - A), a polynomial in lambda, sigma and q.
Poly characteristic_polynomial(const PolyMatrix& a);
bool charpoly_check(int l, const ParabolicShape& p);

// Expresses normal forms in a homogeneous basis of the quotient whose q = 0
// parts form a basis of the classical quotient, one degree at a time.
class BasisExpander;

// Ring presentation Q[sigma, q] / J for one shape: dense variables, the
// E polynomials, and a reduced Groebner basis of J (sigma block dominant).
class Presentation {
 public:
  explicit Presentation(const ParabolicShape& p);
  ~Presentation();

  const ParabolicShape& shape() const { return p_; }
  const poly::VarSpace* space() const { return &space_; }
  int eps_count() const { return p_.n(); }
  int eps_index(int j, int i) const { return p_.nj(j - 1) + i - 1; }
  int q_index(int j) const { return p_.n() + j - 1; }
  int eps_degree(const Exps& e) const { return space_.wdeg_block(e, 0); }
  void split(const Exps& e, Exps& eps, Exps& q) const;

  // Zero outside 0 <= i <= n_l.
  const DensePoly& E(int l, int i) const;
  const poly::Groebner& groebner() const { return *gb_; }
  const poly::Groebner& tracked_groebner() const;
  const std::vector<Exps>& standard_exps() const { return standard_; }

  DensePoly dense(const Poly& f) const;
  DensePoly normal_form(const Poly& f) const { return gb_->reduce(dense(f)); }
  // Expansion in the E_Lambda basis, indexed like standard_monomials(p).
  const BasisExpander& standard_expander() const;

 private:
  ParabolicShape p_;
  poly::VarSpace space_;
  std::vector<std::vector<DensePoly>> E_;  // E_[l + 1][i]
  DensePoly zero_;
  std::unique_ptr<poly::Groebner> gb_;
  std::vector<Exps> standard_;
  mutable std::once_flag tracked_once_, expander_once_;
  mutable std::unique_ptr<poly::Groebner> tracked_;
  mutable std::unique_ptr<BasisExpander> expander_;
};

// Shared cache; entries live for the whole program.
const Presentation& presentation(const ParabolicShape& p);

class BasisExpander {
 public:
  BasisExpander(const Presentation& pres, std::vector<DensePoly> nf_basis);
  std::size_t size() const { return basis_.size(); }
  const DensePoly& element(std::size_t t) const { return basis_[t]; }
  // Coefficients, polynomials in q only, with nf = sum_t c_t element(t).
  std::vector<DensePoly> expand(const DensePoly& nf) const;

 private:
  struct Degree {
    std::vector<int> members;
    std::map<Exps, int, poly::ExpsGreater> position;
    linalg::Matrix<Rational> inverse;
  };
  const Presentation* pres_;
  std::vector<DensePoly> basis_;
  std::map<int, Degree> degrees_;
};

}  // namespace qflag::qsym
