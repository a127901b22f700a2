// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "koornwinder/duality.hpp"
#include "koornwinder/relations.hpp"

namespace {

using kw::Rational;
using kw::SpecializedContext;

void BM_RelationsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const SpecializedContext ctx;
  kw::Noumi<Rational> pi(n, ctx);
  const auto rels = kw::daha_relations(n, ctx);
  const auto space = kw::monomial_test_space<Rational>(n, k);
  for (auto _ : state) benchmark::DoNotOptimize(kw::check_relations_serial(pi, rels, space));
  state.counters["tasks"] = static_cast<double>(rels.size() * space.size());
}

void BM_RelationsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const SpecializedContext ctx;
  kw::Noumi<Rational> pi(n, ctx);
  const auto rels = kw::daha_relations(n, ctx);
  const auto space = kw::monomial_test_space<Rational>(n, k);
  for (auto _ : state) benchmark::DoNotOptimize(kw::check_relations_parallel(pi, rels, space));
  state.counters["tasks"] = static_cast<double>(rels.size() * space.size());
  state.counters["threads"] = omp_get_max_threads();
}

// A fresh Duality per iteration so that the polynomial caches start empty.
void BM_DualityGridSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const SpecializedContext ctx;
  for (auto _ : state) {
    kw::Duality<Rational> d(n, ctx);
    benchmark::DoNotOptimize(d.grid_serial(k));
  }
}

void BM_DualityGridParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const SpecializedContext ctx;
  for (auto _ : state) {
    kw::Duality<Rational> d(n, ctx);
    benchmark::DoNotOptimize(d.grid_parallel(k));
  }
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_RelationsSerial)->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelationsParallel)->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualityGridSerial)->Args({1, 3})->Args({2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualityGridParallel)->Args({1, 3})->Args({2, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
