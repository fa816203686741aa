#include <benchmark/benchmark.h>

#include "fuzzdir/directability.hpp"
#include "fuzzdir/generator.hpp"

using namespace fuzzdir;

namespace {

Ffa sparse_complete(std::size_t n, std::size_t m, std::uint64_t seed) {
  GeneratorConfig c;
  c.state_count = n;
  c.letter_count = m;
  c.degree_palette = {Degree(1, 5), Degree(1, 2), Degree::one()};
  c.density = 3.0 / static_cast<double>(n);
  c.complete = true;
  c.seed = seed;
  return generate(c);
}

void BM_MergeDecider(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Ffa f = sparse_complete(n, 3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(d3_decide_by_merging(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MergeDecider)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

void BM_MuChain(benchmark::State& state) {
  const Ffa f = sparse_complete(static_cast<std::size_t>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(mu_chain(f));
}
BENCHMARK(BM_MuChain)->RangeMultiplier(2)->Range(8, 64);

void BM_SubsetRecognizer(benchmark::State& state) {
  GeneratorConfig c;
  c.state_count = static_cast<std::size_t>(state.range(0));
  c.letter_count = 2;
  c.degree_palette = {Degree::zero(), Degree::zero(), Degree(1, 2), Degree::one()};
  c.seed = 3;
  const Ffa f = generate(c);
  for (auto _ : state) benchmark::DoNotOptimize(build_d_recognizer(f, DirectingKind::D3));
}
BENCHMARK(BM_SubsetRecognizer)->DenseRange(2, 6);

void BM_MatrixRecognizer(benchmark::State& state) {
  GeneratorConfig c;
  c.state_count = static_cast<std::size_t>(state.range(0));
  c.letter_count = 2;
  c.degree_palette = {Degree::zero(), Degree(1, 5), Degree(1, 2), Degree::one()};
  c.seed = 5;
  const Ffa f = generate(c);
  for (auto _ : state) benchmark::DoNotOptimize(build_dd_recognizer(f, DirectingKind::DD3));
}
BENCHMARK(BM_MatrixRecognizer)->DenseRange(2, 5);

}  // namespace
BENCHMARK_MAIN();
