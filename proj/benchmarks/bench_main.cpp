#include <benchmark/benchmark.h>

#include <random>

#include "tcs/chow.hpp"
#include "tcs/reference.hpp"

using namespace tcs;

namespace {

std::vector<IntVec> random_normals(int rank, int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<IntVec> out;
  for (int i = 0; i < count; ++i) {
    IntVec u(rank);
    for (int j = 0; j < rank; ++j) u[j] = d(rng);
    if (!is_zero(u)) out.push_back(u);
  }
  return out;
}

}  // namespace

static void BM_hnf(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  int k = int(state.range(0));
  IntMat m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_hnf)->DenseRange(2, 8, 2);

static void BM_dual_description(benchmark::State& state) {
  int rank = int(state.range(0));
  auto normals = random_normals(rank, 2 * rank, 23);
  for (auto _ : state)
    benchmark::DoNotOptimize(Cone::from_inequalities(normals, {}, rank));
}
BENCHMARK(BM_dual_description)->DenseRange(3, 6, 1);

static void BM_chamber_enumeration(benchmark::State& state) {
  int hyps = int(state.range(0));
  Arrangement a = Arrangement::make(4, random_normals(4, hyps, 41));
  for (auto _ : state) benchmark::DoNotOptimize(fan_from_arrangement(a));
}
BENCHMARK(BM_chamber_enumeration)->DenseRange(4, 8, 2);

static void BM_permutahedral_fan(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(permutahedral_fan(n));
}
BENCHMARK(BM_permutahedral_fan)->DenseRange(2, 4, 1);

static void BM_minimal_scaffold_quotient(benchmark::State& state) {
  int n = int(state.range(0));
  Scaffold s = minimal_scaffold(n);
  for (auto _ : state) benchmark::DoNotOptimize(configuration_fan(s));
}
BENCHMARK(BM_minimal_scaffold_quotient)->DenseRange(1, 3, 1);

static void BM_biperm_quotient_n1(benchmark::State& state) {
  Scaffold s = biperm_scaffold(1);
  for (auto _ : state) benchmark::DoNotOptimize(configuration_fan(s));
}
BENCHMARK(BM_biperm_quotient_n1);

BENCHMARK_MAIN();
