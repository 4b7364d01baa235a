#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "knotsieve/determinant.hpp"
#include "knotsieve/polynomial.hpp"

using namespace knotsieve;

static void BM_BracketDC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto batch = bench::closures(n, 64, 4, false);
  std::size_t i = 0;
  for (auto _ : state) {
    const Embedding& e = batch[i++ % batch.size()];
    benchmark::DoNotOptimize(bracket_dc(e, plan_cut_order(e)));
  }
}
BENCHMARK(BM_BracketDC)->DenseRange(8, 32, 8)->Unit(benchmark::kMicrosecond);

// The state-sum oracle, for scale.
static void BM_BracketNaive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto batch = bench::closures(n, 16, 4, false);
  std::vector<PlanarDiagram> pds;
  for (const auto& e : batch) pds.push_back(e.to_diagram());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bracket_naive(pds[i++ % pds.size()]));
}
BENCHMARK(BM_BracketNaive)->DenseRange(6, 14, 4)->Unit(benchmark::kMicrosecond);

static void BM_PlanCutOrder(benchmark::State& state) {
  auto batch = bench::closures(static_cast<int>(state.range(0)), 64, 8, false);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(plan_cut_order(batch[i++ % batch.size()]));
}
BENCHMARK(BM_PlanCutOrder)->Arg(12)->Arg(23);

static void BM_Goeritz(benchmark::State& state) {
  auto batch = bench::closures(static_cast<int>(state.range(0)), 64, 8, true);
  std::vector<PlanarDiagram> pds;
  for (const auto& e : batch) pds.push_back(e.to_diagram());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(determinant_goeritz(pds[i++ % pds.size()]));
}
BENCHMARK(BM_Goeritz)->Arg(12)->Arg(23);

static void BM_PolynomialMultiply(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  LaurentPolynomial a, b;
  for (int k = 0; k < terms; ++k) {
    a += LaurentPolynomial::monomial(k % 7 - 3, 4 * k - 2 * terms);
    b += LaurentPolynomial::monomial(k % 5 + 1, 4 * k);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMultiply)->RangeMultiplier(4)->Range(4, 256);
