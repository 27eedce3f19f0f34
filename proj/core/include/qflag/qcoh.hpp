#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "qflag/linalg.hpp"
#include "qflag/qsym.hpp"
#include "qflag/weyl.hpp"

namespace qflag::qcoh {

using poly::Poly;
using poly::Rational;
using weyl::ParabolicShape;
using weyl::Permutation;

// Element of qH*(G/P): Schubert class -> coefficient polynomial in q.
using Expansion = std::map<Permutation, Poly>;

Expansion schubert_class(const Permutation& w);
Expansion add(const Expansion& a, const Expansion& b);
Expansion scale(const Expansion& a, const Poly& c);

// Lascoux-Schutzenberger polynomial in x_1..x_{n-1}.
Poly classical_schubert(const Permutation& w);

// C_w as a polynomial in E-symbols with rational coefficients.
Poly quantum_schubert(const Permutation& w, const ParabolicShape& p);

using PolyMatrix = linalg::Matrix<Poly>;

// Multiplication in qH*(G/P) through normal forms modulo J, with the
// Schubert basis recovered degree by degree.
class QuantumRing {
 public:
  explicit QuantumRing(const ParabolicShape& p);

  const ParabolicShape& shape() const { return p_; }
  const std::vector<Permutation>& basis() const { return basis_; }
  int index_of(const Permutation& w) const;
  const Poly& quantum_schubert(int t) const { return C_[t]; }
  const qsym::Presentation& presentation() const { return *pres_; }

  Expansion to_schubert(const poly::DensePoly& nf) const;
  // Any polynomial in sigma, E-symbols and q.
  Expansion reduce(const Poly& f) const;
  poly::DensePoly representative(const Expansion& a) const;

  Expansion multiply(const Expansion& a, const Expansion& b) const;
  Expansion multiply(const Permutation& u, const Permutation& v) const;

  // Column v holds the expansion of a * sigma_v; rows follow basis().
  PolyMatrix operator_of(const Expansion& a) const;
  // Operator of sigma = sum_w sigma_w, cached.
  const PolyMatrix& sigma_operator() const;
  // Operator of a single Schubert class, cached.
  const PolyMatrix& class_operator(const Permutation& w) const;

 private:
  ParabolicShape p_;
  const qsym::Presentation* pres_;
  std::vector<Permutation> basis_;
  std::map<Permutation, int> index_;
  std::vector<Poly> C_;
  std::unique_ptr<qsym::BasisExpander> expander_;
  mutable std::once_flag sigma_once_;
  mutable PolyMatrix sigma_op_;
  mutable std::mutex class_mu_;
  mutable std::map<Permutation, std::unique_ptr<PolyMatrix>> class_ops_;
};

const QuantumRing& ring(const ParabolicShape& p);

Expansion multiply(const Expansion& a, const Expansion& b, const ParabolicShape& p);
Expansion chevalley(int j, const Permutation& w, const ParabolicShape& p);
Poly pairing(const Expansion& a, const Expansion& b, const ParabolicShape& p);
Expansion quantum_euler(const ParabolicShape& p);
// det(d E^{(k+1)}_i / d eps_j) reduced to the Schubert basis.
Expansion jacobian_class(const ParabolicShape& p);
bool jacobian_check(const ParabolicShape& p);
// det(E^{(d+j-1)}_{lambda'_i + j - i}), i, j = 1..n-d, in E-symbols.
Poly giambelli_grassmannian(const weyl::Shape& lambda, int d, int n);

// (u, v, w, degree vector) -> coefficient of q^d sigma_w in sigma_u sigma_v.
using StructureKey = std::tuple<Permutation, Permutation, Permutation, std::vector<int>>;
using StructureTable = std::map<StructureKey, Rational>;
StructureTable structure_table(const ParabolicShape& p);

// Every monomial q^d sigma_u in the expansion has l(u) + sum d_j deg q_j == degree.
bool is_graded(const Expansion& a, int degree, const ParabolicShape& p);
// Exponents of q_1..q_k in a monomial (entry j-1 for q_j).
std::vector<int> q_exponents(const poly::Monomial& m, int k);

}  // namespace qflag::qcoh
