// Serial versus OpenMP kernels: exact cover, block collection search and
// parallelism enumeration.

#include <benchmark/benchmark.h>

#include "unital/design.hpp"

using namespace unital;

namespace {

// Perfect matchings of K_n as an exact cover problem.
ExactCover matchings(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> options;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) options.push_back({a, b});
  return ExactCover(n, options);
}

SL2 group_of(std::uint32_t q) {
  const auto pe = prime_power(q);
  return SL2(make_field(pe->first, pe->second));
}

void BM_ExactCoverSerial(benchmark::State& state) {
  const auto ec = matchings(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ec.solve_serial().solutions.size());
}

void BM_ExactCoverParallel(benchmark::State& state) {
  const auto ec = matchings(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ec.solve_parallel().solutions.size());
}

void collection_search(benchmark::State& state, bool parallel) {
  const auto g = group_of(static_cast<std::uint32_t>(state.range(0)));
  const auto s = cyclic_subgroup_C(g);
  SearchOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(search_block_collections(g, s, opts).size());
}

void BM_CollectionSearchSerial(benchmark::State& state) { collection_search(state, false); }
void BM_CollectionSearchParallel(benchmark::State& state) { collection_search(state, true); }

void parallelisms(benchmark::State& state, bool parallel) {
  const auto g = group_of(static_cast<std::uint32_t>(state.range(0)));
  SearchOptions opts;
  opts.limit = 1;
  const auto s = cyclic_subgroup_C(g);
  const auto u = build_affine_unital(g, s, search_block_collections(g, s, opts).front());
  for (auto _ : state) {
    ParallelismSolver solver(u, parallel);
    benchmark::DoNotOptimize(solver.enumerate().parallelisms.size());
  }
}

void BM_ParallelismsSerial(benchmark::State& state) { parallelisms(state, false); }
void BM_ParallelismsParallel(benchmark::State& state) { parallelisms(state, true); }

}  // namespace

BENCHMARK(BM_ExactCoverSerial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactCoverParallel)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CollectionSearchSerial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CollectionSearchParallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelismsSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelismsParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
