#include <benchmark/benchmark.h>

#include "htl/builders.hpp"
#include "htl/search.hpp"
#include "htl/surface.hpp"

namespace {

void BM_Verify(benchmark::State& state) {
  const auto l = htl::build(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(htl::verify(l));
}
BENCHMARK(BM_Verify)->Arg(7)->Arg(24)->Arg(100);

void BM_Canonicalize(benchmark::State& state) {
  const auto l = htl::build(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(htl::canonicalize(l));
}
BENCHMARK(BM_Canonicalize)->Arg(7)->Arg(24)->Arg(100);

void BM_Glue(benchmark::State& state) {
  const auto l = htl::build(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(htl::glue(l));
}
BENCHMARK(BM_Glue)->Arg(7)->Arg(100);

void BM_Build(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(htl::build(state.range(0)));
}
BENCHMARK(BM_Build)->Arg(7)->Arg(50)->Arg(100);

void BM_BuildOriented(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(htl::build_oriented(state.range(0)));
}
BENCHMARK(BM_BuildOriented)->Arg(7)->Arg(9)->Arg(100);

void BM_Search(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(htl::search_labelings(k, n));
}
BENCHMARK(BM_Search)->Args({12, 1})->Args({9, 2})->Args({8, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
