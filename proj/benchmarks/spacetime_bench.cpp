#include <benchmark/benchmark.h>

#include "eventdecor/causal.hpp"
#include "eventdecor/spacetime.hpp"

namespace ed = eventdecor;

static ed::ExperimentGeometry layout(double height, const ed::BodySpec& body) {
  ed::GroundSatelliteLayout l;
  l.satellite_height = height;
  l.pbs_height = 100.0;
  return l.build(body);
}

static void BM_DeltaTExact(benchmark::State& state) {
  const auto body = ed::BodySpec::earth();
  const auto g = layout(static_cast<double>(state.range(0)), body);
  for (auto _ : state) benchmark::DoNotOptimize(ed::delta_t_exact(g, body));
}
BENCHMARK(BM_DeltaTExact)->Arg(400'000)->Arg(20'000'000);

static void BM_DeltaTLog(benchmark::State& state) {
  const auto body = ed::BodySpec::earth();
  const auto g = layout(2e7, body);
  for (auto _ : state) benchmark::DoNotOptimize(ed::delta_t_log(g, body));
}
BENCHMARK(BM_DeltaTLog);

static void BM_DeltaTKentTruncated(benchmark::State& state) {
  const auto body = ed::BodySpec::earth();
  auto g = layout(5e5, body);
  const double d = 5.0 * ed::kent_transition_delay(g, body);
  g.hold_2 += d;
  g.t_d2 += d;
  for (auto _ : state)
    benchmark::DoNotOptimize(ed::delta_t_causal(g, body, ed::CausalPrescription::Kent));
}
BENCHMARK(BM_DeltaTKentTruncated);
