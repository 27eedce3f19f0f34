#include "qflag/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qflag/errors.hpp"
#include "qflag/peterson.hpp"
#include "qflag/qcoh.hpp"
#include "qflag/qsym.hpp"
#include "qflag/solver.hpp"
#include "qflag/toeplitz.hpp"

namespace qflag::verify {

using poly::Poly;
using poly::Rational;
using poly::Var;
using weyl::ParabolicShape;
using weyl::Permutation;

namespace {

// Platform-independent draws (no std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t m) { return g_() % m; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(g_() >> 11) * 0x1.0p-53; }
  Rational rational(int num, int den) {
    Rational r(range(-num, num), range(1, den));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 g_;
};

struct Context {
  const Options& opt;
  Rng rng;
  CheckResult res;
  std::ostringstream detail;
  bool failed = false;

  Context(const Options& o, std::uint64_t salt, std::string name) : opt(o), rng(o.seed * 1000003 + salt) {
    res.name = std::move(name);
  }
  int cap(int n) const { return std::min(n, opt.max_n); }
  int samples(int base) const { return std::max(1, static_cast<int>(std::ceil(base * opt.sample_scale))); }
  void fail(const std::string& msg) {
    if (!failed) detail << msg;
    failed = true;
  }
  void expect(bool ok, const std::function<std::string()>& msg) {
    ++res.cases;
    if (!ok) fail(msg());
  }
};

std::vector<ParabolicShape> shapes_up_to(int max_n) {
  std::vector<ParabolicShape> out;
  for (int n = 2; n <= max_n; ++n)
    for (auto& p : ParabolicShape::all(n)) out.push_back(p);
  return out;
}

std::string str(const qcoh::Expansion& e) {
  std::string s;
  for (auto& [w, c] : e) s += (s.empty() ? "" : " + ") + std::string("(") + c.to_string() + ")" + w.to_string();
  return s.empty() ? "0" : s;
}

toeplitz::ExactPoint random_big_cell_point(Rng& rng, int n) {
  while (true) {
    toeplitz::ExactPoint x = toeplitz::ExactPoint::identity(n);
    for (auto& v : x.a) v = rng.rational(6, 3);
    if (static_cast<int>(toeplitz::stratum(x).ip.size()) == n - 1) return x;
  }
}

// ---------------------------------------------------------------------------

void a2_example(Context& c) {
  const auto p = ParabolicShape::full_flag(3);
  std::map<Var, Poly> sub;
  for (int j = 1; j <= 3; ++j) sub[Var::sigma(j, 1)] = Poly::var(Var::x(j));
  const Poly x1 = Poly::var(Var::x(1)), x2 = Poly::var(Var::x(2)), x3 = Poly::var(Var::x(3));
  const Poly q1 = Poly::var(Var::q(1)), q2 = Poly::var(Var::q(2));
  const Poly e2 = qsym::quantum_E(3, 2, p).substitute(sub);
  const Poly e3 = qsym::quantum_E(3, 3, p).substitute(sub);
  c.expect(e2 == qsym::classical_e(2, 3) + q1 + q2, [&] { return "E^(3)_2 = " + e2.to_string(); });
  c.expect(e3 == x1 * x2 * x3 + x1 * q2 + x3 * q1, [&] { return "E^(3)_3 = " + e3.to_string(); });
}

void charpoly_all(Context& c) {
  for (auto& p : shapes_up_to(c.cap(5)))
    for (int l = 1; l <= p.k() + 1; ++l)
      c.expect(qsym::charpoly_check(l, p), [&] { return "charpoly fails for " + p.to_string() + " l=" + std::to_string(l); });
}

void ring_checks(Context& c) {
  for (auto& p : shapes_up_to(c.cap(4))) {
    const auto& R = qcoh::ring(p);
    const auto& B = R.basis();
    const int N = static_cast<int>(B.size());
    std::vector<std::vector<qcoh::Expansion>> prod(N, std::vector<qcoh::Expansion>(N));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) prod[i][j] = R.multiply(B[i], B[j]);
    const Permutation e = Permutation::identity(p.n());
    const Permutation top = weyl::longest_min_rep(p);
    for (int i = 0; i < N; ++i) {
      c.expect(prod[R.index_of(e)][i] == qcoh::schubert_class(B[i]), [&] { return "unit law fails at " + B[i].to_string(); });
      for (int j = 0; j < N; ++j) {
        c.expect(prod[i][j] == prod[j][i], [&] { return "not commutative: " + B[i].to_string() + " " + B[j].to_string(); });
        c.expect(qcoh::is_graded(prod[i][j], B[i].length() + B[j].length(), p), [&] { return "grading: " + str(prod[i][j]); });
        bool nonneg = true;
        for (auto& [w, coef] : prod[i][j])
          for (auto& [m, v] : coef.terms())
            if (v < 0 || v.get_den() != 1) nonneg = false;
        c.expect(nonneg, [&] { return "structure constant not a nonnegative integer in " + str(prod[i][j]); });
        auto it = prod[i][j].find(top);
        const Poly pair = it == prod[i][j].end() ? Poly() : it->second;
        const bool dual = B[j] == weyl::pd(B[i], p);
        c.expect(pair == Poly(dual ? 1 : 0), [&] {
          return "pairing <" + B[i].to_string() + "," + B[j].to_string() + "> = " + pair.to_string();
        });
      }
    }
    for (int t = 0; t < c.samples(100); ++t) {
      const int a = c.rng.range(0, N - 1), b = c.rng.range(0, N - 1), d = c.rng.range(0, N - 1);
      auto lhs = R.multiply(prod[a][b], qcoh::schubert_class(B[d]));
      auto rhs = R.multiply(qcoh::schubert_class(B[a]), prod[b][d]);
      c.expect(lhs == rhs, [&] { return "associativity fails on " + B[a].to_string() + B[b].to_string() + B[d].to_string(); });
    }
  }
}

void chevalley_checks(Context& c) {
  for (auto& p : shapes_up_to(c.cap(4))) {
    const auto& R = qcoh::ring(p);
    for (int j = 1; j <= p.k(); ++j) {
      const Permutation s = Permutation::simple(p.nj(j), p.n());
      for (auto& w : R.basis()) {
        auto a = qcoh::chevalley(j, w, p);
        auto b = R.multiply(s, w);
        c.expect(a == b, [&] { return "chevalley " + p.to_string() + " j=" + std::to_string(j) + " w=" + w.to_string() + ": " + str(a) + " vs " + str(b); });
      }
      const Permutation v = weyl::longest_min_rep(ParabolicShape::grassmannian(p.nj(j), p.n()));
      const qcoh::Expansion expect =
          qcoh::scale(qcoh::schubert_class(v * weyl::tau(j, j, p)), Poly::var(Var::q(j)));
      auto got = R.multiply(s, v);
      c.expect(got == expect, [&] { return "top Grassmannian class identity " + p.to_string() + ": " + str(got); });
    }
  }
}

void jacobian_checks(Context& c) {
  std::vector<ParabolicShape> shapes;
  for (int n = 2; n <= c.cap(4); ++n) shapes.push_back(ParabolicShape::full_flag(n));
  for (int n = 3; n <= c.cap(4); ++n) {
    shapes.push_back(ParabolicShape(n, {1}));
    shapes.push_back(ParabolicShape(n, {2}));
  }
  for (auto& p : shapes) {
    auto j = qcoh::jacobian_class(p);
    auto e = qcoh::quantum_euler(p);
    c.expect(j == e, [&] { return "Jacobian " + p.to_string() + ": " + str(j) + " vs Euler " + str(e); });
  }
}

void kirillov_checks(Context& c) {
  for (int n = 2; n <= c.cap(5); ++n) {
    const auto p = ParabolicShape::full_flag(n);
    const auto& pres = qsym::presentation(p);
    for (int d = 1; d < n; ++d)
      for (auto& w : weyl::min_coset_reps(ParabolicShape::grassmannian(d, n))) {
        const auto lam = weyl::shape_of_grassmannian(w, d);
        const Poly g = qcoh::giambelli_grassmannian(lam, d, n);
        const Poly cw = qcoh::quantum_schubert(w, p);
        const bool same = pres.normal_form(qsym::expand_E_symbols(g, p)) == pres.normal_form(qsym::expand_E_symbols(cw, p));
        c.expect(same, [&] { return "Kirillov determinant differs from C_w for w=" + w.to_string(); });
        if (n <= 4) {
          auto sg = qsym::straighten_rewrite(g, p);
          auto sc = qsym::straighten_rewrite(cw, p);
          c.expect(sg.standard == sc.standard, [&] { return "rewrite normal forms differ for w=" + w.to_string(); });
        }
      }
  }
}

void kostant_checks(Context& c) {
  for (int n = 2; n <= c.cap(5); ++n) {
    const auto p = ParabolicShape::full_flag(n);
    for (int t = 0; t < c.samples(50); ++t) {
      const auto x = random_big_cell_point(c.rng, n);
      const auto k = peterson::kostant_q(x);
      const auto g = peterson::genkos_power(x, p);
      const auto a = peterson::q_values(x, p);
      c.expect(k == g && k == a, [&] { return "Kostant/GenKos/ASK disagree at n=" + std::to_string(n); });
    }
  }
  for (int n = 2; n <= c.cap(5); ++n)
    for (int d = 1; d < n; ++d)
      for (double t : {0.25, 0.5, 0.8, 1.0, 1.3, 2.0}) {
        const auto y = peterson::grassmannian_chart_point(d, n, t);
        const auto q = peterson::q_values(y, ParabolicShape::grassmannian(d, n));
        const double expect = std::pow(t, n);
        c.expect(std::abs(q[0] - expect) <= 1e-10 * std::max(1.0, expect), [&] {
          std::ostringstream os;
          os << "q(u(t)) = " << q[0] << " vs t^n = " << expect << " at d=" << d << " n=" << n;
          return os.str();
        });
      }
}

void pf_checks(Context& c) {
  for (auto& p : shapes_up_to(c.cap(5))) {
    for (int t = 0; t < c.samples(20); ++t) {
      std::vector<double> Q;
      for (int j = 0; j < p.k(); ++j) Q.push_back(c.rng.uniform(1e-3, 10.0));
      std::string where = p.to_string() + " Q[0]=" + std::to_string(Q[0]);
      try {
        auto pp = solver::positive_point(p, Q);
        bool positive = true;
        for (auto& [w, v] : pp.schubert_values) positive = positive && v > 0;
        c.expect(positive, [&] { return "nonpositive Schubert value at " + where; });
        c.expect(pp.residual < 1e-12, [&] { return "residual " + std::to_string(pp.residual) + " at " + where; });
        c.expect(pp.generator_defect < 1e-9, [&] { return "not a simultaneous eigenvector at " + where; });
        c.expect(pp.euler_value > 0, [&] { return "Euler class not positive at " + where; });
        c.expect(toeplitz::is_tnn(pp.reconstructed, 1e-9), [&] { return "reconstructed point not TNN at " + where; });
        auto q = peterson::q_values(pp.reconstructed, p, 1e-12);
        double err = 0;
        for (int j = 0; j < p.k(); ++j) err = std::max(err, std::abs(q[j] - Q[j]) / std::max(1.0, Q[j]));
        c.expect(err < 1e-8, [&] { return "q round trip error " + std::to_string(err) + " at " + where; });
      } catch (const std::exception& e) {
        c.expect(false, [&] { return std::string("exception at ") + where + ": " + e.what(); });
      }
    }
  }
}

void inverse_checks(Context& c) {
  for (int n = 2; n <= c.cap(5); ++n)
    for (int t = 0; t < c.samples(50); ++t) {
      std::vector<double> d;
      for (int i = 1; i < n; ++i) d.push_back(c.rng.below(3) == 0 ? 0.0 : c.rng.uniform(1e-3, 5.0));
      try {
        auto r = solver::tnn_inverse(d);
        c.expect(r.tnn && r.max_residual < 1e-8, [&] {
          return "tnn_inverse n=" + std::to_string(n) + " residual " + std::to_string(r.max_residual) + (r.tnn ? "" : " not TNN");
        });
      } catch (const std::exception& e) {
        c.expect(false, [&] { return std::string("tnn_inverse threw: ") + e.what(); });
      }
    }
}

void positivity_checks(Context& c) {
  for (int t = 0; t < c.samples(50); ++t) {
    const int n = c.rng.range(2, c.cap(5));
    toeplitz::FloatPoint x = toeplitz::FloatPoint::identity(n);
    const int factors = c.rng.range(1, 3);
    for (int f = 0; f < factors; ++f) {
      const int d = c.rng.range(1, n - 1);
      x = toeplitz::semigroup_mul(x, toeplitz::positive_curve(d, n, c.rng.uniform(0.2, 2.0)));
    }
    const auto st = toeplitz::stratum(x, 1e-9);
    const ParabolicShape p(n, st.ip);
    bool positive = true;
    for (auto& w : weyl::min_coset_reps(p)) positive = positive && peterson::eval_schubert(w, x, p) > 0;
    c.expect(positive && toeplitz::is_tnn(x, 1e-9), [&] { return "TNN product point with a nonpositive Schubert value in " + p.to_string(); });
  }
  for (int t = 0; t < c.samples(50); ++t) {
    const int n = c.rng.range(2, c.cap(5));
    toeplitz::ExactPoint x = random_big_cell_point(c.rng, n);
    auto rep = toeplitz::tnn_report(x);
    if (rep.tnn) {
      --t;
      continue;
    }
    const auto p = ParabolicShape::full_flag(n);
    bool some_nonpositive = false;
    for (auto& w : weyl::min_coset_reps(p)) some_nonpositive = some_nonpositive || peterson::eval_schubert(w, x, p) <= 0;
    c.expect(some_nonpositive, [&] { return "non-TNN point with all Schubert values positive at n=" + std::to_string(n); });
  }
}

// Polynomial extrapolation to 0 through the samples (eps_k, f_k).
Rational neville_at_zero(const std::vector<Rational>& eps, std::vector<Rational> f) {
  const int m = static_cast<int>(eps.size());
  for (int level = 1; level < m; ++level)
    for (int i = 0; i + level < m; ++i)
      f[i] = (eps[i + level] * f[i] - eps[i] * f[i + 1]) / (eps[i + level] - eps[i]);
  return f[0];
}

void restriction_checks(Context& c) {
  for (int n = 3; n <= c.cap(4); ++n) {
    const auto full = ParabolicShape::full_flag(n);
    for (auto& p : ParabolicShape::all(n)) {
      if (p.is_full_flag()) continue;
      for (int s = 0; s < c.samples(3); ++s) {
        // A point of the P-stratum: the totally nonnegative point with Delta_i = 0 exactly off I^P.
        std::vector<double> d(n - 1, 0.0);
        for (int i : p.ip()) d[i - 1] = c.rng.uniform(0.5, 3.0);
        const auto xf = solver::tnn_inverse(d).x;
        toeplitz::ExactPoint x = toeplitz::ExactPoint::identity(n);
        for (int i = 0; i < n - 1; ++i) x.a[i] = Rational(xf.a[i]);
        toeplitz::ExactPoint y = toeplitz::ExactPoint::identity(n);
        for (auto& v : y.a)
          do v = c.rng.rational(3, 2);
          while (v == 0);
        std::vector<Rational> eps;
        std::vector<toeplitz::ExactPoint> pts;
        for (int k = 3; k <= 16 && eps.size() < 12; ++k) {
          const Rational e(1, 1 << k);
          toeplitz::ExactPoint xe = x;
          for (int i = 0; i < n - 1; ++i) xe.a[i] += e * y.a[i];
          if (static_cast<int>(toeplitz::stratum(xe).ip.size()) != n - 1) continue;
          eps.push_back(e);
          pts.push_back(xe);
        }
        if (eps.size() < 8) {
          --s;
          continue;
        }
        std::vector<peterson::CellCoordinates<Rational>> fc;
        for (auto& xe : pts) fc.push_back(peterson::coordinates(xe, full));
        for (auto& w : weyl::min_coset_reps(p)) {
          const Poly cb = qcoh::quantum_schubert(w, full);
          std::vector<Rational> f;
          for (auto& cc : fc) f.push_back(peterson::eval_E_polynomial(cb, cc));
          const double lim = neville_at_zero(eps, f).get_d();
          const double val = peterson::eval_schubert(w, xf, p);
          c.expect(std::abs(lim - val) <= 1e-8 * std::max(1.0, std::abs(val)), [&] {
            std::ostringstream os;
            os << "restriction " << p.to_string() << " w=" << w.to_string() << ": limit " << lim << " vs " << val;
            return os.str();
          });
        }
      }
    }
  }
}

void no_zero_products(Context& c) {
  for (auto& p : shapes_up_to(c.cap(4))) {
    const auto& R = qcoh::ring(p);
    for (auto& u : R.basis())
      for (auto& v : R.basis())
        c.expect(!R.multiply(u, v).empty(), [&] { return "zero product " + u.to_string() + " * " + v.to_string() + " in " + p.to_string(); });
  }
}

// ---------------------------------------------------------------------------
// Module invariants beyond the acceptance list.

void coset_invariants(Context& c) {
  for (int n = 2; n <= c.cap(6); ++n)
    for (auto& p : ParabolicShape::all(n)) {
      long expect = 1;
      for (int i = 2; i <= n; ++i) expect *= i;
      for (int j = 1; j <= p.k() + 1; ++j)
        for (int i = 2; i <= p.block(j); ++i) expect /= i;
      const auto reps = weyl::min_coset_reps(p);
      c.expect(static_cast<long>(reps.size()) == expect, [&] { return "|W^P| wrong for " + p.to_string(); });
      const int top = weyl::longest_min_rep(p).length();
      for (auto& w : reps) {
        const auto d = weyl::pd(w, p);
        c.expect(weyl::pd(d, p) == w && w.length() + d.length() == top, [&] { return "PD fails at " + w.to_string(); });
      }
    }
}

void straighten_invariants(Context& c) {
  for (auto& p : shapes_up_to(c.cap(4))) {
    for (int t = 0; t < c.samples(3); ++t) {
      Poly f;
      for (int term = 0; term < 3; ++term) {
        Poly m(c.rng.range(-3, 3));
        for (int f2 = 0; f2 < 3; ++f2) {
          const int j = c.rng.range(1, p.k());
          m *= Poly::var(Var::E(j, c.rng.range(1, p.nj(j))));
        }
        f += m;
      }
      auto s = qsym::straighten(f, p);
      c.expect(qsym::verify_straightened(f, s, p), [&] { return "straighten identity fails for " + f.to_string(); });
      auto again = qsym::straighten(qsym::standard_part(s), p);
      c.expect(again.standard == s.standard && again.ideal_witness.empty(),
               [&] { return "straighten not idempotent on " + p.to_string(); });
      if (p.is_full_flag()) {
        auto g = qsym::straighten_groebner(f, p);
        c.expect(g.standard == s.standard, [&] { return "rewrite and Groebner normal forms differ for " + f.to_string(); });
      }
    }
  }
}

void nilpotency_invariants(Context& c) {
  for (int n = 2; n <= c.cap(5); ++n)
    for (int t = 0; t < c.samples(5); ++t) {
      const auto x = random_big_cell_point(c.rng, n);
      const auto st = toeplitz::stratum(x);
      const ParabolicShape p(n, st.ip);
      const auto a = peterson::ask_conjugate(x, p);
      auto pw = a;
      for (int i = 1; i < n; ++i) pw = pw * a;
      c.expect(pw == linalg::Matrix<Rational>(n, n), [&] { return "conjugated nilpotent is not nilpotent"; });
      // sigma and q read from the ASK pattern satisfy the relations E^{(k+1)} = 0.
      std::map<Var, Rational> vals;
      for (int i = 1; i <= p.nj(1); ++i) vals[Var::sigma(1, i)] = -a(0, i - 1);
      for (int j = 2; j <= p.k() + 1; ++j)
        for (int r = 0; r < p.block(j); ++r) vals[Var::sigma(j, p.block(j) - r)] = -a(p.nj(j - 1) + r, p.nj(j) - 1);
      const auto q = peterson::q_values(x, p);
      for (int j = 1; j <= p.k(); ++j) vals[Var::q(j)] = q[j - 1];
      for (int i = 1; i <= n; ++i)
        c.expect(qsym::quantum_E(p.k() + 1, i, p).evaluate(vals) == 0, [&] { return "E relation nonzero at an ASK point"; });
    }
}

void pf_uniqueness(Context& c) {
  for (auto& p : shapes_up_to(c.cap(4))) {
    std::vector<double> Q;
    for (int j = 0; j < p.k(); ++j) Q.push_back(c.rng.uniform(0.1, 10.0));
    const auto m = solver::build_Msigma(p, Q);
    const auto a = solver::pf_solve(m);
    std::vector<double> start;
    for (int i = 0; i < m.rows(); ++i) start.push_back(c.rng.uniform(0.01, 1.0));
    const auto b = solver::pf_solve(m, 1e-13, 200000, start);
    double d = 0;
    for (std::size_t i = 0; i < a.vector.size(); ++i) d = std::max(d, std::abs(a.vector[i] - b.vector[i]));
    c.expect(d < 1e-10, [&] { return "PF vector depends on the start in " + p.to_string(); });
  }
}

struct Entry {
  const char* name;
  void (*run)(Context&);
};

const std::vector<Entry>& criteria() {
  static const std::vector<Entry> list = {
      {"A2 quantum elementary symmetric example", a2_example},
      {"characteristic polynomial of ASK matrices", charpoly_all},
      {"ring axioms, integrality, Poincare duality", ring_checks},
      {"quantum Chevalley formula", chevalley_checks},
      {"Jacobian equals quantum Euler class", jacobian_checks},
      {"Kirillov determinant", kirillov_checks},
      {"Kostant formula and positive curve", kostant_checks},
      {"Perron-Frobenius positive points", pf_checks},
      {"totally nonnegative inverse round trip", inverse_checks},
      {"positivity equivalence sampling", positivity_checks},
      {"restriction of Schubert classes", restriction_checks},
      {"no zero products", no_zero_products},
  };
  return list;
}

const std::vector<Entry>& invariants() {
  static const std::vector<Entry> list = {
      {"coset enumeration and PD involution", coset_invariants},
      {"straightening identity and idempotence", straighten_invariants},
      {"ASK nilpotency at Toeplitz points", nilpotency_invariants},
      {"Perron-Frobenius uniqueness", pf_uniqueness},
  };
  return list;
}

CheckResult run(const Entry& e, const Options& opt, std::uint64_t salt) {
  Context c(opt, salt, e.name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    e.run(c);
  } catch (const std::exception& ex) {
    c.fail(std::string("exception: ") + ex.what());
  }
  c.res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.res.passed = !c.failed;
  c.res.detail = c.failed ? c.detail.str() : std::to_string(c.res.cases) + " cases";
  return c.res;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (auto& e : criteria()) v.push_back(e.name);
    return v;
  }();
  return names;
}

CheckResult criterion(int id, const Options& opt) {
  if (id < 1 || id > static_cast<int>(criteria().size())) throw ValidationError("no such criterion");
  return run(criteria()[id - 1], opt, static_cast<std::uint64_t>(id));
}

std::vector<CheckResult> verify_suite(const Options& opt) {
  if (opt.max_n < 2 || opt.max_n > 6) throw ValidationError("max_n must be between 2 and 6");
  std::vector<CheckResult> out;
  for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) out.push_back(criterion(i, opt));
  for (std::size_t i = 0; i < invariants().size(); ++i) out.push_back(run(invariants()[i], opt, 100 + i));
  return out;
}

}  // namespace qflag::verify
