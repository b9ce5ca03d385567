#include <benchmark/benchmark.h>

#include "ultrafid/certificate.hpp"
#include "ultrafid/inversion.hpp"
#include "ultrafid/transforms.hpp"

using namespace ultrafid;

static void BM_GnClosed(benchmark::State& state) {
  const UltraIndex n(static_cast<int>(state.range(0)));
  const SlitPlanePoint z(0.7, 1.3);
  (void)coefficients(n);
  for (auto _ : state) benchmark::DoNotOptimize(gn_closed(n, z));
}
BENCHMARK(BM_GnClosed)->Arg(1)->Arg(4)->Arg(8)->Arg(32);

static void BM_GnRecurrence(benchmark::State& state) {
  const UltraIndex n(static_cast<int>(state.range(0)));
  const SlitPlanePoint z(0.7, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(gn_recurrence(n, z));
}
BENCHMARK(BM_GnRecurrence)->Arg(1)->Arg(4)->Arg(8)->Arg(32);

static void BM_GnQuadrature(benchmark::State& state) {
  const UltraIndex n(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gn_quadrature(n, Complex(0.7, 0.2)));
}
BENCHMARK(BM_GnQuadrature)->Arg(1)->Arg(8);

static void BM_GInverse(benchmark::State& state) {
  const UltraIndex n(static_cast<int>(state.range(0)));
  (void)coefficients(n);
  for (auto _ : state) benchmark::DoNotOptimize(g_inverse(n, Complex(0.3, -0.8)));
}
BENCHMARK(BM_GInverse)->Arg(1)->Arg(4)->Arg(8);

static void BM_Certificate16(benchmark::State& state) {
  const UltraIndex n(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fid_certificate(n, GridSpec{1e-2, 1e2, 16, 16}));
}
BENCHMARK(BM_Certificate16)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
