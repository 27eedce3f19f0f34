#include <benchmark/benchmark.h>

#include "qflag/peterson.hpp"
#include "qflag/qcoh.hpp"
#include "qflag/qsym.hpp"
#include "qflag/solver.hpp"
#include "qflag/toeplitz.hpp"

using namespace qflag;
using weyl::ParabolicShape;
using weyl::Permutation;

static void BM_QuantumE(benchmark::State& state) {
  const auto p = ParabolicShape::full_flag(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (int i = 1; i <= p.n(); ++i) benchmark::DoNotOptimize(qsym::quantum_E(p.k() + 1, i, p));
}
BENCHMARK(BM_QuantumE)->DenseRange(3, 6);

// Presentation and reduced Groebner basis of the relation ideal.
static void BM_Presentation(benchmark::State& state) {
  const auto p = ParabolicShape::full_flag(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    qsym::Presentation pres(p);
    benchmark::DoNotOptimize(pres.standard_exps().size());
  }
}
BENCHMARK(BM_Presentation)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_MultiplyAllPairs(benchmark::State& state) {
  const auto& R = qcoh::ring(ParabolicShape::full_flag(static_cast<int>(state.range(0))));
  for (auto _ : state)
    for (auto& u : R.basis())
      for (auto& v : R.basis()) benchmark::DoNotOptimize(R.multiply(u, v));
  state.SetItemsProcessed(state.iterations() * R.basis().size() * R.basis().size());
}
BENCHMARK(BM_MultiplyAllPairs)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_StraightenRewrite(benchmark::State& state) {
  const auto p = ParabolicShape::full_flag(4);
  const poly::Poly f = poly::Poly::var(poly::Var::E(3, 3), 2) * poly::Poly::var(poly::Var::E(2, 2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(qsym::straighten_rewrite(f, p));
}
BENCHMARK(BM_StraightenRewrite)->Unit(benchmark::kMillisecond);

static void BM_TnnReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  toeplitz::FloatPoint x = toeplitz::FloatPoint::identity(n);
  for (int d = 1; d < n; ++d) x = toeplitz::semigroup_mul(x, toeplitz::positive_curve(d, n, 0.8));
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz::tnn_report(x, 1e-9));
}
BENCHMARK(BM_TnnReport)->DenseRange(4, 7);

static void BM_ExactQValues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  toeplitz::ExactPoint x = toeplitz::ExactPoint::identity(n);
  for (int i = 0; i < n - 1; ++i) x.a[i] = poly::Rational(2 * i + 3, i + 1);
  const auto p = ParabolicShape::full_flag(n);
  for (auto _ : state) benchmark::DoNotOptimize(peterson::q_values(x, p));
}
BENCHMARK(BM_ExactQValues)->DenseRange(3, 6);

static void BM_PositivePoint(benchmark::State& state) {
  const auto p = ParabolicShape::full_flag(static_cast<int>(state.range(0)));
  std::vector<double> Q(p.k(), 2.0);
  solver::positive_point(p, Q);  // warm the ring cache
  for (auto _ : state) benchmark::DoNotOptimize(solver::positive_point(p, Q));
}
BENCHMARK(BM_PositivePoint)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_TnnInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> d(n - 1, 1.5);
  solver::tnn_inverse(d);
  for (auto _ : state) benchmark::DoNotOptimize(solver::tnn_inverse(d));
}
BENCHMARK(BM_TnnInverse)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
