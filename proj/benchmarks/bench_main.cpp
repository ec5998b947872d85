#include <benchmark/benchmark.h>

#include "absspec/canonical.hpp"
#include "absspec/enumeration.hpp"
#include "absspec/families.hpp"
#include "absspec/spectral.hpp"

namespace {

void BM_CanonicalCode(benchmark::State& state) {
  absspec::Graph g = absspec::g1(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto code = absspec::canonical_code(g);
    benchmark::DoNotOptimize(code);
  }
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

void BM_JacobiAbsSpectrum(benchmark::State& state) {
  absspec::SymMatrix m = absspec::abs_matrix(absspec::g2(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto spectrum = absspec::eigenvalues(m);
    benchmark::DoNotOptimize(spectrum.values);
  }
}
BENCHMARK(BM_JacobiAbsSpectrum)->Arg(16)->Arg(32)->Arg(62);

void BM_EnumerateTrees(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    for (const auto& t : absspec::enumerate_trees(n)) count += t.order();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTrees)->Arg(8)->Arg(10)->Arg(12);

void BM_EnumerateBicyclic(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    absspec::for_each_in_class({n, 2, {}, {}, {}, {}},
                               [&](const absspec::Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateBicyclic)->Arg(6)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
