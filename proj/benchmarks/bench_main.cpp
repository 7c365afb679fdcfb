#include <benchmark/benchmark.h>

#include "hgc/fibrations/lifting.hpp"
#include "hgc/grothendieck/diagram.hpp"
#include "hgc/grothendieck/total.hpp"
#include "hgc/hocolim/bar.hpp"
#include "hgc/marked/localization.hpp"
#include "hgc/scat/standard.hpp"

using namespace hgc;

namespace {

void BM_Nerve(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  auto c = categories::poset(3);
  for (auto _ : state) {
    Nerve n(c, dim);
    benchmark::DoNotOptimize(n.set()->total_size());
  }
}
BENCHMARK(BM_Nerve)->DenseRange(2, 5);

void BM_TotalSpace(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  auto x = constant_diagram(categories::walking_iso(), standard::delta(1, dim).set);
  for (auto _ : state) benchmark::DoNotOptimize(grothendieck_total(x).object.set->total_size());
}
BENCHMARK(BM_TotalSpace)->DenseRange(2, 4);

void BM_Bar(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  auto x = constant_diagram(categories::poset(2), standard::horn(2, 1, dim).set);
  for (auto _ : state) benchmark::DoNotOptimize(bar_construction(x).object.set->total_size());
}
BENCHMARK(BM_Bar)->DenseRange(2, 4);

void BM_Localize(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  auto x = sharp(standard::delta(2, dim).set);
  for (auto _ : state) benchmark::DoNotOptimize(localize(x).object.set->total_size());
}
BENCHMARK(BM_Localize)->DenseRange(2, 4);

void BM_InnerFibration(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  auto x = constant_diagram(categories::poset(1), standard::delta(1, 4).set);
  auto total = grothendieck_total(x);
  for (auto _ : state) benchmark::DoNotOptimize(is_inner_fibration(total.projection, n_max).holds);
}
BENCHMARK(BM_InnerFibration)->DenseRange(2, 3);

}  // namespace

BENCHMARK_MAIN();
