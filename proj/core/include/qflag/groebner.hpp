#pragma once

#include <vector>

#include "qflag/dense.hpp"

namespace qflag::poly {

// Reduced Groebner basis of an ideal over Q, with optional cofactor tracking
// so every basis element (and every reduction) can be written back in terms
// of the original generators.
class Groebner {
 public:
  Groebner(const VarSpace* space, std::vector<DensePoly> generators, bool track_cofactors);

  const std::vector<DensePoly>& basis() const { return basis_; }
  std::size_t generator_count() const { return ngens_; }
  bool tracks_cofactors() const { return track_; }

  // Normal form of f.
  DensePoly reduce(const DensePoly& f) const;
  // Normal form r of f together with cofactors c_i with f = sum c_i g_i + r,
  // g_i the original generators. Requires cofactor tracking.
  DensePoly reduce(const DensePoly& f, std::vector<DensePoly>& cofactors) const;

  bool is_standard(const Exps& e) const;
  // All standard monomials when the quotient is finite dimensional and the
  // block-0 variables are the only ones (others must not occur in any
  // standard monomial up to the bound). Sorted decreasing.
  std::vector<Exps> standard_monomials(int block, int max_wdeg) const;

 private:
  struct Element {
    DensePoly p;
    std::vector<DensePoly> rep;  // p = sum rep[i] * generator_i
  };

  void run(std::vector<DensePoly> gens);
  // Full reduction of e by current_ (in place).
  void reduce_element(Element& e, const std::vector<Element>& by) const;

  const VarSpace* space_;
  std::size_t ngens_;
  bool track_;
  std::vector<DensePoly> basis_;
  std::vector<std::vector<DensePoly>> reps_;
};

}  // namespace qflag::poly
