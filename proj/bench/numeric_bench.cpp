// Serial reference against the OpenMP multistart kernels.
#include <benchmark/benchmark.h>

#include "germ/numeric/numeric.hpp"
#include "germ/poly/parse.hpp"

namespace {

germ::NumericMap map_of(const std::string& comps, const std::vector<std::string>& names) {
  germ::Variables v(names);
  return germ::NumericMap(germ::parse_polynomial_list(comps, v), v);
}

germ::NumericConfig config(benchmark::State& state) {
  germ::NumericConfig cfg;
  cfg.policy = state.range(0) == 0 ? germ::ExecutionPolicy::Serial : germ::ExecutionPolicy::Parallel;
  cfg.starts = static_cast<int>(state.range(1));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
  return cfg;
}

void BM_MinNormFibrePoint(benchmark::State& state) {
  auto g = map_of("x*y, z^2", {"x", "y", "z"});
  auto cfg = config(state);
  for (auto _ : state) benchmark::DoNotOptimize(germ::min_norm_fibre_point(g, {1.0, 1.0}, cfg, 7));
}

void BM_NhIsolationBlowup(benchmark::State& state) {
  auto g = map_of("x, x*y", {"x", "y"});
  auto cfg = config(state);
  for (auto _ : state) benchmark::DoNotOptimize(germ::nh_isolation_test(g, cfg));
}

void BM_RealPointsNear(benchmark::State& state) {
  germ::Variables v({"x", "y", "z"});
  auto ideal = germ::parse_polynomial_list("x^2 - y^2", v);
  auto avoid = germ::parse_polynomial_list("x*y, z^2", v);
  auto cfg = config(state);
  for (auto _ : state) benchmark::DoNotOptimize(germ::real_points_near(ideal, avoid, v, cfg));
}

}  // namespace

BENCHMARK(BM_MinNormFibrePoint)->ArgsProduct({{0, 1}, {16, 64, 256}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NhIsolationBlowup)->ArgsProduct({{0, 1}, {16, 64}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RealPointsNear)->ArgsProduct({{0, 1}, {16, 64}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
