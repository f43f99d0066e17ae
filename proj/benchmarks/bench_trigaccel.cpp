#include <benchmark/benchmark.h>

#include "trigaccel/acceleration.hpp"
#include "trigaccel/evaluation.hpp"
#include "trigaccel/families.hpp"
#include "trigaccel/transforms.hpp"

using namespace trigaccel;

namespace {

SeriesSpec example() {
  return SeriesSpec{families::two_exponential(2, 3), TrigPhase(1, 0, 3 * pi() / 4), TrigKind::cosine};
}

RSequence geometric_r(std::size_t p) {
  std::vector<scalar_t> r;
  real_t value = real_t(1) / 3;
  for (std::size_t k = 0; k < p; ++k, value *= real_t(2) / 3) r.emplace_back(value);
  return RSequence(r);
}

void BM_ElementarySymmetric(benchmark::State& state) {
  const RSequence r = geometric_r(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(elementary_symmetric(r));
}
BENCHMARK(BM_ElementarySymmetric)->Arg(2)->Arg(8)->Arg(32);

void BM_ApplyLRecurrence(benchmark::State& state) {
  const auto a = families::two_exponential(2, 3);
  const RSequence r = geometric_r(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_L_recurrence(a, r, 20));
}
BENCHMARK(BM_ApplyLRecurrence)->Arg(2)->Arg(8);

void BM_ApplyLSymmetric(benchmark::State& state) {
  const auto a = families::two_exponential(2, 3);
  const RSequence r = geometric_r(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_L_symmetric(a, r, 20));
}
BENCHMARK(BM_ApplyLSymmetric)->Arg(2)->Arg(8);

void BM_TransformedPartialSum(benchmark::State& state) {
  const SeriesSpec s = example();
  const RSequence r = geometric_r(3);
  for (auto _ : state) {
    const TransformResult t = transform(s, r);
    benchmark::DoNotOptimize(transformed_partial_sum(t, state.range(0)));
  }
}
BENCHMARK(BM_TransformedPartialSum)->Arg(2)->Arg(20);

void BM_EulerPartialSum(benchmark::State& state) {
  const SeriesSpec s = example();
  const RSequence r = geometric_r(12);
  for (auto _ : state) benchmark::DoNotOptimize(euler_partial_sum(s, r, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EulerPartialSum)->Arg(4)->Arg(8)->Arg(12);

void BM_EstimateRSequence(benchmark::State& state) {
  RSelectionConfig cfg;
  cfg.max_p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    // a fresh sequence each time so the memo does not hide evaluation cost
    benchmark::DoNotOptimize(estimate_r_sequence(families::two_exponential(2, 3), cfg));
  }
}
BENCHMARK(BM_EstimateRSequence)->Arg(1)->Arg(4);

void BM_BuildReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_report(example(), {}, 1e-6, 3));
}
BENCHMARK(BM_BuildReport)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
