// Serial reference vs OpenMP state sum on rational tangle diagrams.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "tanglekit/tangles.hpp"
#include "tanglekit/tlalgebra.hpp"

using namespace tanglekit;

namespace {

PlanarTangleDiagram diagram_with(int crossings) {
  // [3 3 ... r] with the requested crossing total
  std::vector<std::int64_t> e;
  for (int left = crossings; left > 0; left -= 3) e.push_back(std::min(3, left));
  return rational_to_diagram(build_rational(TwistVector(e)));
}

void BM_Serial(benchmark::State& st) {
  const auto d = diagram_with(static_cast<int>(st.range(0)));
  StateSumOptions opt{24};
  for (auto _ : st) benchmark::DoNotOptimize(state_sum_serial(d, opt));
  st.SetComplexityN(st.range(0));
}

void BM_Parallel(benchmark::State& st) {
  const auto d = diagram_with(static_cast<int>(st.range(0)));
  StateSumOptions opt{24};
  for (auto _ : st) benchmark::DoNotOptimize(state_sum(d, opt));
  st.SetComplexityN(st.range(0));
}

void BM_ParallelClosure(benchmark::State& st) {
  const auto d = solid_torus_closure(diagram_with(static_cast<int>(st.range(0))));
  StateSumOptions opt{24};
  for (auto _ : st) benchmark::DoNotOptimize(state_sum(d, opt));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelClosure)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
