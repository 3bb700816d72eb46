#include <benchmark/benchmark.h>

#include <random>

#include "owf/coinduction.hpp"
#include "owf/pipeline.hpp"
#include "owf/ow_tower.hpp"

namespace {

owf::Pattern random_bits(std::mt19937_64& rng, const owf::SupportPtr& support) {
  std::vector<owf::Symbol> values(support->size());
  for (auto& v : values) v = rng() & 1U;
  return owf::Pattern(owf::Alphabet::bits(), support, std::move(values));
}

void BM_OwMap(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto window = owf::Support::ball(static_cast<int>(state.range(0)));
  const owf::Pattern x = random_bits(rng, window);
  for (auto _ : state) benchmark::DoNotOptimize(owf::ow_map(x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(window->size()));
}
BENCHMARK(BM_OwMap)->DenseRange(2, 6, 2);

void BM_TowerMap(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto window = owf::Support::ball(6);
  const owf::Pattern x = random_bits(rng, window);
  const int levels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(owf::tower_map(x, levels));
}
BENCHMARK(BM_TowerMap)->DenseRange(1, 5, 2);

void BM_TowerSection(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const owf::TowerOutput y = owf::tower_map(random_bits(rng, owf::Support::ball(6)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(owf::tower_section(y));
}
BENCHMARK(BM_TowerSection);

void BM_FiberCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(owf::ow_fiber_census(2));
}
BENCHMARK(BM_FiberCensus)->Unit(benchmark::kMillisecond);

void BM_KernelGroup(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(owf::kernel_group(r, 2).dimension());
}
BENCHMARK(BM_KernelGroup)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_Transversal(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const owf::Coinduction co{owf::CoinductionConfig{}};
    benchmark::DoNotOptimize(co.transversal(count, co.base_point()));
  }
}
BENCHMARK(BM_Transversal)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_PsiInverse(benchmark::State& state) {
  const owf::Coinduction co{owf::CoinductionConfig{}};
  const auto cells = owf::ball(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    // Memoised after the first pass over the ball.
    benchmark::DoNotOptimize(co.psi_inverse(cells[i], co.base_point()));
    i = (i + 1) % cells.size();
  }
}
BENCHMARK(BM_PsiInverse)->Arg(5);

void BM_Pipeline(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const owf::Coinduction co{owf::CoinductionConfig{}};
  const owf::Pattern x = random_bits(rng, owf::Support::ball(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    const auto s = owf::key_pipeline(co, x, co.base_point(), 2);
    benchmark::DoNotOptimize(owf::key_pipeline_inverse(co, s));
  }
}
BENCHMARK(BM_Pipeline)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
