#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "memoryless/analysis.hpp"
#include "memoryless/generators.hpp"
#include "memoryless/group.hpp"
#include "memoryless/synthesis.hpp"

using namespace memoryless;

namespace {

Permutation random_perm(const Alphabet& a, std::mt19937_64& rng) {
  std::vector<StateIndex> images(a.size());
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(a, std::move(images));
}

void BM_Synthesize(benchmark::State& state) {
  const Alphabet a(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::mt19937_64 rng(1);
  std::vector<Permutation> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(random_perm(a, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(inputs[i++ % inputs.size()]));
  state.SetLabel("q^n=" + std::to_string(a.size()));
}
BENCHMARK(BM_Synthesize)->Args({2, 4})->Args({3, 3})->Args({4, 4})->Args({5, 4})->Args({2, 10});

void BM_SchreierSimsSymFamily(benchmark::State& state) {
  const Alphabet a(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::vector<Permutation> gens;
  for (const auto& g : sym_generators(a).pis) gens.push_back(g.to_permutation());
  for (auto _ : state) benchmark::DoNotOptimize(build_chain(gens).order());
}
BENCHMARK(BM_SchreierSimsSymFamily)->Args({2, 4})->Args({3, 3})->Args({4, 3})->Args({2, 6});

void BM_SchreierSimsAltFamily(benchmark::State& state) {
  const Alphabet a(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::vector<Permutation> gens;
  for (const auto& g : alt_generators(a).pis) gens.push_back(g.to_permutation());
  for (auto _ : state) benchmark::DoNotOptimize(build_chain(gens).order());
}
BENCHMARK(BM_SchreierSimsAltFamily)->Args({3, 3})->Args({5, 2})->Args({10, 2});

void BM_ComplexityTableAll(benchmark::State& state) {
  const Alphabet a(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(complexity_table(a, std::nullopt).diameter());
}
BENCHMARK(BM_ComplexityTableAll)->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_OptimalProgram(benchmark::State& state) {
  const Alphabet a(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::mt19937_64 rng(2);
  std::vector<Permutation> inputs;
  for (int i = 0; i < 8; ++i) inputs.push_back(random_perm(a, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(optimal_program(inputs[i++ % inputs.size()]).length());
}
BENCHMARK(BM_OptimalProgram)->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
