// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "cyclokit/field_profile.hpp"
#include "cyclokit/verify.hpp"

using namespace cyclokit;

namespace {

void BM_VerifySerial(benchmark::State& state) {
  FieldProfile F = FieldProfile::finite_field(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_field_serial(F));
}

void BM_VerifyParallel(benchmark::State& state) {
  FieldProfile F = FieldProfile::finite_field(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_field_parallel(F));
  state.counters["threads"] = max_threads();
}

void BM_FrobeniusSerial(benchmark::State& state) {
  auto fields = finite_fields_up_to(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_sweep_serial(fields));
}

void BM_FrobeniusParallel(benchmark::State& state) {
  auto fields = finite_fields_up_to(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_sweep_parallel(fields));
  state.counters["threads"] = max_threads();
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(23)->Arg(97)->Arg(257)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(23)->Arg(97)->Arg(257)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrobeniusSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrobeniusParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
