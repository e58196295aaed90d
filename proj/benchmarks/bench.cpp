#include "edlab/bounds.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace edlab;

void bm_heisenberg_frame(benchmark::State& state) {
  const MeasurementModel m = scenario_model(Scenario::Fig2, ScenarioParams{1.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(heisenberg_frame(m));
  }
}
BENCHMARK(bm_heisenberg_frame);

void bm_witness_sampling(benchmark::State& state) {
  const HeisenbergFrame f =
      heisenberg_frame(scenario_model(Scenario::Fig2, ScenarioParams{1.1}));
  const SignChoice sign = governing_sign(f);
  const int samples = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(sampled_witness(f, sign, samples, rng));
  }
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(bm_witness_sampling)->Arg(100)->Arg(1000);

void bm_bound_report(benchmark::State& state) {
  const MeasurementModel m = scenario_model(Scenario::Fig3, ScenarioParams{0.7, 0.0, 0.01});
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_report(m, WitnessStrategy::sampled(100, 5)));
  }
}
BENCHMARK(bm_bound_report);

}  // namespace

BENCHMARK_MAIN();
