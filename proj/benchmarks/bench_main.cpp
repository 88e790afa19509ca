#include <benchmark/benchmark.h>

#include "lahbell/lahbell.hpp"

namespace {

using lahbell::ExactRational;

void BM_LahTriangleFresh(benchmark::State& state) {
  const auto rows = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    lahbell::TriangleCache cache(lahbell::TriangleKind::kLah);
    benchmark::DoNotOptimize(cache.row(rows).data());
  }
}
BENCHMARK(BM_LahTriangleFresh)->Arg(50)->Arg(100)->Arg(200);

void BM_CachedRowRead(benchmark::State& state) {
  const auto& cache = lahbell::stirling2_triangle();
  cache.row(200);
  for (auto _ : state) benchmark::DoNotOptimize(cache.row(150).data());
}
BENCHMARK(BM_CachedRowRead);

void BM_LahBellPolynomial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lahbell::lah_bell_polynomial(n));
}
BENCHMARK(BM_LahBellPolynomial)->Arg(10)->Arg(40);

void BM_DegenerateLahBell(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const ExactRational lambda = ExactRational::parse("2/7");
  for (auto _ : state) benchmark::DoNotOptimize(lahbell::degenerate_lah_bell_polynomial(n, lambda));
}
BENCHMARK(BM_DegenerateLahBell)->Arg(8)->Arg(20);

void BM_DegenerateLahBellViaBell(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const ExactRational lambda = ExactRational::parse("2/7");
  for (auto _ : state) {
    benchmark::DoNotOptimize(lahbell::degenerate_lah_bell_polynomial_via_bell(n, lambda));
  }
}
BENCHMARK(BM_DegenerateLahBellViaBell)->Arg(8)->Arg(20);

void BM_ExactRisingMoment(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const lahbell::DegeneratePoisson d(3, ExactRational(lahbell::BigInt(1), lahbell::BigInt(m)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lahbell::direct_moment(d, lahbell::MomentKind::kRising, 8));
  }
}
BENCHMARK(BM_ExactRisingMoment)->Arg(10)->Arg(40);

void BM_SeriesRisingMoment(benchmark::State& state) {
  const lahbell::DegeneratePoisson d(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lahbell::direct_moment(d, lahbell::MomentKind::kRising, 8));
  }
}
BENCHMARK(BM_SeriesRisingMoment);

void BM_InverseCdfDraw(benchmark::State& state) {
  const lahbell::InverseCdfSampler sampler(lahbell::DegeneratePoisson(2));
  lahbell::SamplerStream stream(42);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(stream));
}
BENCHMARK(BM_InverseCdfDraw);

void BM_PartitionedEstimate(benchmark::State& state) {
  const lahbell::DegeneratePoisson d(2);
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lahbell::estimate_moment_partitioned(d, lahbell::MomentKind::kRising, 3, 1000000, 42, workers));
  }
}
BENCHMARK(BM_PartitionedEstimate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
