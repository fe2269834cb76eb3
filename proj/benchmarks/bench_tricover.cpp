#include <benchmark/benchmark.h>

#include "tricover/census.hpp"
#include "tricover/cycles.hpp"
#include "tricover/generators.hpp"
#include "tricover/solver.hpp"

using namespace tricover;

namespace {

std::vector<Hypergraph> instances(std::size_t m, std::size_t count) {
  std::vector<Hypergraph> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::size_t lo = 3;
    while (lo * (lo - 1) * (lo - 2) / 6 < m) ++lo;
    out.push_back(gen_random_connected(lo + (i % (2 * m + 2 - lo)), m, i));
  }
  return out;
}

void BM_ExactTau(benchmark::State& state) {
  const auto pool = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_tau(pool[i++ % pool.size()]).size);
}
BENCHMARK(BM_ExactTau)->Arg(6)->Arg(10)->Arg(14)->Arg(18);

void BM_ExactNu(benchmark::State& state) {
  const auto pool = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_nu(pool[i++ % pool.size()]).size);
}
BENCHMARK(BM_ExactNu)->Arg(6)->Arg(10)->Arg(14)->Arg(18);

void BM_ConstructiveCover(benchmark::State& state) {
  const auto pool = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(constructive_cover(pool[i++ % pool.size()]).size);
}
BENCHMARK(BM_ConstructiveCover)->Arg(10)->Arg(20)->Arg(40);

void BM_IntersectingCycles(benchmark::State& state) {
  const auto pool = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_intersecting_cycles(pool[i++ % pool.size()]));
}
BENCHMARK(BM_IntersectingCycles)->Arg(10)->Arg(100)->Arg(1000);

void BM_CanonicalKey(benchmark::State& state) {
  const auto pool = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(pool[i++ % pool.size()]));
}
BENCHMARK(BM_CanonicalKey)->Arg(4)->Arg(8)->Arg(12);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
