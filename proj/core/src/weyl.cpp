#include "qflag/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qflag/errors.hpp"

namespace qflag::weyl {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw ValidationError("not a permutation: " + to_string());
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw ValidationError("simple reflection index out of range");
  auto im = identity(n).images_;
  std::swap(im[i - 1], im[i]);
  return Permutation(std::move(im));
}

Permutation Permutation::longest(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = n - i;
  return Permutation(std::move(im));
}

Permutation Permutation::from_word(const std::vector<int>& word, int n) {
  auto im = identity(n).images_;
  for (int i : word) {
    if (i < 1 || i >= n) throw ValidationError("word letter out of range");
    std::swap(im[i - 1], im[i]);
  }
  return Permutation(std::move(im));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw ValidationError("permutation sizes differ");
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[images_[i] - 1] = i + 1;
  return Permutation(std::move(im));
}

std::vector<int> Permutation::right_descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (images_[i - 1] > images_[i]) d.push_back(i);
  return d;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  auto im = images_;
  for (;;) {
    int desc = 0;
    for (int i = 1; i < size(); ++i)
      if (im[i - 1] > im[i]) desc = i;
    if (desc == 0) break;
    std::swap(im[desc - 1], im[desc]);
    word.push_back(desc);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

ParabolicShape::ParabolicShape(int n, std::vector<int> ip) : n_(n), ip_(std::move(ip)) {
  if (n < 2) throw ValidationError("n must be at least 2");
  if (ip_.empty()) throw ValidationError("I^P must be nonempty");
  for (std::size_t j = 0; j < ip_.size(); ++j) {
    if (ip_[j] < 1 || ip_[j] >= n) throw ValidationError("I^P entries must lie in 1..n-1");
    if (j > 0 && ip_[j] <= ip_[j - 1]) throw ValidationError("I^P must be strictly increasing");
  }
}

ParabolicShape ParabolicShape::full_flag(int n) {
  std::vector<int> ip(n - 1);
  std::iota(ip.begin(), ip.end(), 1);
  return ParabolicShape(n, std::move(ip));
}

ParabolicShape ParabolicShape::grassmannian(int d, int n) { return ParabolicShape(n, {d}); }

std::vector<ParabolicShape> ParabolicShape::all(int n) {
  std::vector<ParabolicShape> out;
  for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> ip;
    for (int i = 1; i < n; ++i)
      if (mask & (1 << (i - 1))) ip.push_back(i);
    out.emplace_back(n, std::move(ip));
  }
  std::sort(out.begin(), out.end(), [](const ParabolicShape& a, const ParabolicShape& b) {
    if (a.k() != b.k()) return a.k() < b.k();
    return a.ip() < b.ip();
  });
  return out;
}

int ParabolicShape::nj(int j) const {
  if (j <= 0) return 0;
  if (j > k()) return n_;
  return ip_[j - 1];
}

bool ParabolicShape::contains(int i) const { return index_of(i) != 0; }

int ParabolicShape::index_of(int i) const {
  for (int j = 0; j < k(); ++j)
    if (ip_[j] == i) return j + 1;
  return 0;
}

std::string ParabolicShape::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " ip={";
  for (int j = 0; j < k(); ++j) os << (j ? "," : "") << ip_[j];
  os << '}';
  return os.str();
}

bool in_WP(const Permutation& w, const ParabolicShape& p) {
  if (w.size() != p.n()) return false;
  for (int a : w.right_descents())
    if (!p.contains(a)) return false;
  return true;
}

Permutation min_rep(const Permutation& w, const ParabolicShape& p) {
  auto im = w.images();
  for (int j = 1; j <= p.k() + 1; ++j)
    std::sort(im.begin() + p.nj(j - 1), im.begin() + p.nj(j));
  return Permutation(std::move(im));
}

std::vector<Permutation> min_coset_reps(const ParabolicShape& p) {
  std::vector<int> im(p.n());
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation w(im);
    if (in_WP(w, p)) out.push_back(std::move(w));
  } while (std::next_permutation(im.begin(), im.end()));
  std::stable_sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    return a.length() < b.length();
  });
  return out;
}

Permutation longest_of_WP(const ParabolicShape& p) {
  std::vector<int> im(p.n());
  for (int j = 1; j <= p.k() + 1; ++j)
    for (int i = p.nj(j - 1); i < p.nj(j); ++i) im[i] = p.nj(j) - (i - p.nj(j - 1));
  return Permutation(std::move(im));
}

Permutation longest_min_rep(const ParabolicShape& p) {
  return min_rep(Permutation::longest(p.n()), p);
}

Permutation pd(const Permutation& w, const ParabolicShape& p) {
  if (!in_WP(w, p)) throw ValidationError("pd: " + w.to_string() + " is not in W^P");
  return min_rep(Permutation::longest(p.n()) * w, p);
}

Shape shape_of_grassmannian(const Permutation& w, int d) {
  const int n = w.size();
  if (d < 1 || d >= n) throw ValidationError("descent position out of range");
  if (!in_WP(w, ParabolicShape::grassmannian(d, n)))
    throw ValidationError(w.to_string() + " is not Grassmannian with descent " + std::to_string(d));
  Shape lambda(d);
  for (int i = 1; i <= d; ++i) lambda[i - 1] = w(d + 1 - i) - (d + 1 - i);
  return lambda;
}

Permutation perm_of_shape(const Shape& lambda, int d, int n) {
  if (d < 1 || d >= n) throw ValidationError("descent position out of range");
  if (static_cast<int>(lambda.size()) > d) throw ValidationError("shape has more than d parts");
  Shape lam(lambda);
  lam.resize(d, 0);
  for (int i = 0; i < d; ++i) {
    if (lam[i] < 0 || lam[i] > n - d) throw ValidationError("shape does not fit the box");
    if (i > 0 && lam[i] > lam[i - 1]) throw ValidationError("shape is not weakly decreasing");
  }
  std::vector<int> im(n, 0);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= d; ++i) {
    im[d - i] = lam[i - 1] + d + 1 - i;
    used[im[d - i]] = true;
  }
  int pos = d;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) im[pos++] = v;
  return Permutation(std::move(im));
}

Shape conjugate(const Shape& lambda) {
  int width = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
  Shape out(width, 0);
  for (int part : lambda)
    for (int c = 0; c < part; ++c) ++out[c];
  return out;
}

std::vector<int> tau_word(int h, int l, const ParabolicShape& p) {
  if (h < 1 || l > p.k() || h > l) throw ValidationError("tau: need 1 <= h <= l <= k");
  std::vector<int> word;
  for (int i = p.nj(h); i <= p.nj(l + 1) - 1; ++i) word.push_back(i);
  for (int i = p.nj(l) - 1; i >= p.nj(h - 1) + 1; --i) word.push_back(i);
  return word;
}

Permutation tau(int h, int l, const ParabolicShape& p) {
  return Permutation::from_word(tau_word(h, l, p), p.n());
}

Permutation reflection(int h, int l, int n) {
  if (h < 1 || l >= n || h > l) throw ValidationError("root interval out of range");
  auto im = Permutation::identity(n).images();
  std::swap(im[h - 1], im[l]);
  return Permutation(std::move(im));
}

}  // namespace qflag::weyl
