#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "knotsieve/generation.hpp"
#include "knotsieve/pipeline.hpp"
#include "knotsieve/reduction.hpp"

using namespace knotsieve;

static void BM_ProcessCandidate(benchmark::State& state) {
  auto batch = bench::closures(23, 256, 4, state.range(0) != 0);
  GenerationCursor src{DiagramClass::kAlgebraic, 23, 0};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(process_candidate(batch[i++ % batch.size()], src));
}
BENCHMARK(BM_ProcessCandidate)->Arg(0)->Arg(1)->ArgName("alternating");

static void BM_FindPassMove(benchmark::State& state) {
  auto batch = bench::closures(static_cast<int>(state.range(0)), 256, 8, true);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_pass_move(batch[i++ % batch.size()]));
}
BENCHMARK(BM_FindPassMove)->Arg(12)->Arg(23);

static void BM_EnumerateTangles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TangleEnumerator te;
    std::uint64_t count = 0;
    te.for_each(n, 0, [&](std::uint64_t, const Tangle&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTangles)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_VerifyBudget(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  TangleEnumerator te;
  te.count(n);
  GenerationCursor src{DiagramClass::kAlgebraic, n, 0};
  for (auto _ : state) {
    std::uint64_t flagged = 0;
    generate_closures(te, n, 0, [](std::uint64_t) { return true; }, [&](const Candidate& c) {
      if (c.components == 1) flagged += process_candidate(c.embedding, src).flagged;
      return true;
    });
    benchmark::DoNotOptimize(flagged);
  }
}
BENCHMARK(BM_VerifyBudget)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
