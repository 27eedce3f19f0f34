#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace qflag::weyl {

// Element of S_n in one-line notation, images 1..n.
//
// Products are function composition: (u * v)(i) = u(v(i)). Right
// multiplication by s_i swaps the entries in positions i and i+1, so
// s_2 * s_1 = [3,1,2] and s_1 * s_2 = [2,3,1] in S_3.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation simple(int i, int n);
  static Permutation longest(int n);
  // s_{w[0]} * s_{w[1]} * ... ; an empty word gives the identity.
  static Permutation from_word(const std::vector<int>& word, int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  int length() const;
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  // Positions i with w(i) > w(i+1).
  std::vector<int> right_descents() const;
  // A reduced word ending in a right descent; empty for the identity.
  std::vector<int> reduced_word() const;
  bool is_identity() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// n together with I^P = {n_1 < ... < n_k}; n_0 = 0 and n_{k+1} = n.
class ParabolicShape {
 public:
  ParabolicShape() = default;
  ParabolicShape(int n, std::vector<int> ip);

  static ParabolicShape full_flag(int n);
  static ParabolicShape grassmannian(int d, int n);
  // Every shape with nonempty I^P for this n.
  static std::vector<ParabolicShape> all(int n);

  int n() const { return n_; }
  int k() const { return static_cast<int>(ip_.size()); }
  const std::vector<int>& ip() const { return ip_; }
  // n_j for 0 <= j <= k+1.
  int nj(int j) const;
  // n_j - n_{j-1} for 1 <= j <= k+1.
  int block(int j) const { return nj(j) - nj(j - 1); }
  bool is_full_flag() const { return k() == n_ - 1; }
  bool contains(int i) const;
  // Index j with n_j == i, or 0 when i is not in I^P.
  int index_of(int i) const;
  // Weighted degree of q_j, n_{j+1} - n_{j-1}.
  int q_degree(int j) const { return nj(j + 1) - nj(j - 1); }
  std::string to_string() const;

  auto operator<=>(const ParabolicShape&) const = default;
  bool operator==(const ParabolicShape&) const = default;

 private:
  int n_ = 0;
  std::vector<int> ip_;
};

bool in_WP(const Permutation& w, const ParabolicShape& p);

// Minimal representative of the coset w W_P.
Permutation min_rep(const Permutation& w, const ParabolicShape& p);

// W^P sorted by (length, one-line notation).
std::vector<Permutation> min_coset_reps(const ParabolicShape& p);

// Longest element of W_P (blockwise reversal) and of W^P.
Permutation longest_of_WP(const ParabolicShape& p);
Permutation longest_min_rep(const ParabolicShape& p);

Permutation pd(const Permutation& w, const ParabolicShape& p);

using Shape = std::vector<int>;

// lambda_i = w(d+1-i) - (d+1-i); requires w Grassmannian with descent at most at d.
Shape shape_of_grassmannian(const Permutation& w, int d);
Permutation perm_of_shape(const Shape& lambda, int d, int n);
Shape conjugate(const Shape& lambda);

// The word s_{n_h} ... s_{n_{l+1}-1} s_{n_l - 1} ... s_{n_{h-1}+1}.
std::vector<int> tau_word(int h, int l, const ParabolicShape& p);
Permutation tau(int h, int l, const ParabolicShape& p);

// s_alpha for alpha = alpha_h + ... + alpha_l, i.e. the transposition (h, l+1).
Permutation reflection(int h, int l, int n);

inline std::ostream& operator<<(std::ostream& os, const Permutation& v) { return os << v.to_string(); }

}  // namespace qflag::weyl
