#include <benchmark/benchmark.h>

#include "veronalt/identity_set.hpp"
#include "veronalt/reference.hpp"
#include "veronalt/relatively_free.hpp"
#include "veronalt/split_backend.hpp"

using namespace veronalt;

// Full build of the rank-3 alternative algebra up to the given degree.
static void BM_EngineBuild(benchmark::State& state) {
  const auto degree = static_cast<std::size_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    RelativelyFreeAlgebra alg(IdentitySet::alternative(), 3);
    alg.set_threads(threads);
    alg.build_up_to(degree);
    benchmark::DoNotOptimize(alg.quotient_dim({1, 1, 1}));
  }
}
BENCHMARK(BM_EngineBuild)->Args({4, 1})->Args({4, 4})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

// Serial monomial-coordinate construction, same components.
static void BM_ReferenceBuild(benchmark::State& state) {
  const auto degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ReferenceTIdeal ref(IdentitySet::alternative(), 3, degree);
    std::size_t total = 0;
    for (std::size_t d = 1; d <= degree; ++d)
      for (const auto& m : multidegrees_of_total(3, d)) total += ref.quotient_dim(m);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ReferenceBuild)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SplitRankModular(benchmark::State& state) {
  const MultiDegree m{2, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(split_rank_modular(m, 1));
}
BENCHMARK(BM_SplitRankModular)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
