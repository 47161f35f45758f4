#include <benchmark/benchmark.h>

#include "bentga/ga.hpp"
#include "bentga/gowers.hpp"
#include "bentga/quantum.hpp"
#include "bentga/statevector.hpp"
#include "bentga/walsh.hpp"

using namespace bentga;

static void BM_WalshHadamard(benchmark::State& state) {
  Rng rng(1);
  const auto f = random_truth_table(static_cast<unsigned>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(walsh_hadamard(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_WalshHadamard)->DenseRange(4, 16, 2);

static void BM_GowersSpectrum(benchmark::State& state) {
  Rng rng(2);
  const auto f = random_truth_table(static_cast<unsigned>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(gowers_u2(f));
}
BENCHMARK(BM_GowersSpectrum)->DenseRange(4, 16, 2);

static void BM_GowersBruteForce(benchmark::State& state) {
  Rng rng(3);
  const auto f = random_truth_table(static_cast<unsigned>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(gowers_u2_bruteforce(f));
}
BENCHMARK(BM_GowersBruteForce)->DenseRange(2, 8, 2);

static void BM_ExactAmplitude(benchmark::State& state) {
  Rng rng(4);
  const GowersCircuit c(random_truth_table(static_cast<unsigned>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(all_zero_amplitude(c));
}
BENCHMARK(BM_ExactAmplitude)->DenseRange(4, 12, 2);

static void BM_Statevector(benchmark::State& state) {
  Rng rng(5);
  const GowersCircuit c(random_truth_table(static_cast<unsigned>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(statevector_run(c));
}
BENCHMARK(BM_Statevector)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_HadamardTestShots(benchmark::State& state) {
  const GowersCircuit c(inner_product(6));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_shots_hadamard_test(c, static_cast<std::uint64_t>(state.range(0)), ++seed));
}
BENCHMARK(BM_HadamardTestShots)->RangeMultiplier(10)->Range(1000, 1000000);

static void BM_GaGenerations(benchmark::State& state) {
  GaConfig config;
  config.n = static_cast<unsigned>(state.range(0));
  config.generations = 50;
  for (auto _ : state) benchmark::DoNotOptimize(run_ga(config));
  state.SetItemsProcessed(state.iterations() * config.generations * config.population);
}
BENCHMARK(BM_GaGenerations)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
