#include <benchmark/benchmark.h>

#include <numeric>

#include "oco/parallel.hpp"

namespace {

oco::GameSetup bench_setup(int horizon) {
  oco::GameSetup s;
  s.mirror = oco::MirrorMap::squared_norm(oco::FeasibleSet::ball(oco::Vec::Zero(8), 1.0));
  s.engine = oco::Engine::OLP;
  s.schedule.eta = oco::Rate::inv_sqrt(1.0);
  s.adversary.kind = oco::AdversaryKind::Quadratic;
  s.hint.kind = oco::HintKind::LastGradient;
  s.horizon = horizon;
  return s;
}

std::vector<std::uint64_t> seeds(int n) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void BM_SeedsSerial(benchmark::State& state) {
  const auto setup = bench_setup(200);
  const auto s = seeds(static_cast<int>(state.range(0)));
  const std::vector<oco::BoundId> bounds{oco::BoundId::S1Dynamic, oco::BoundId::OlpStaticEta};
  for (auto _ : state) benchmark::DoNotOptimize(oco::serial::run_seeds(setup, s, bounds));
}

void BM_SeedsParallel(benchmark::State& state) {
  const auto setup = bench_setup(200);
  const auto s = seeds(static_cast<int>(state.range(0)));
  const std::vector<oco::BoundId> bounds{oco::BoundId::S1Dynamic, oco::BoundId::OlpStaticEta};
  for (auto _ : state) benchmark::DoNotOptimize(oco::parallel::run_seeds(setup, s, bounds));
}

void BM_SegmentSerial(benchmark::State& state) {
  const auto m = oco::MonotoneOperator::cubic_skew(16, 1.0);
  const oco::Vec x = oco::Vec::Zero(16), y = oco::Vec::Ones(16);
  for (auto _ : state)
    benchmark::DoNotOptimize(oco::serial::segment_integral(m, x, y, static_cast<int>(state.range(0))));
}

void BM_SegmentParallel(benchmark::State& state) {
  const auto m = oco::MonotoneOperator::cubic_skew(16, 1.0);
  const oco::Vec x = oco::Vec::Zero(16), y = oco::Vec::Ones(16);
  for (auto _ : state)
    benchmark::DoNotOptimize(oco::parallel::segment_integral(m, x, y, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_SeedsSerial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeedsParallel)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SegmentSerial)->Arg(1024)->Arg(65536);
BENCHMARK(BM_SegmentParallel)->Arg(1024)->Arg(65536);

BENCHMARK_MAIN();
