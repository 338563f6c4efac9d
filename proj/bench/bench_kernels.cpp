// Serial reference kernels vs the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "mfz/atoms.hpp"
#include "mfz/logsum.hpp"
#include "mfz/system.hpp"
#include "mfz/transfer.hpp"

namespace {

mfz::DigitSystem cantor(int fold) { return mfz::cantor_convolution(fold, 0.5); }

void BM_atom_dp_serial(benchmark::State& state) {
  const mfz::DigitSystem sys = cantor(3);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto lv = mfz::ref::atom_masses(sys, k);
    benchmark::DoNotOptimize(lv.log_mass.data());
  }
}

void BM_atom_dp_omp(benchmark::State& state) {
  const mfz::DigitSystem sys = cantor(3);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto lv = mfz::atom_masses(sys, k);
    benchmark::DoNotOptimize(lv.log_mass.data());
  }
}

void BM_logsumexp_serial(benchmark::State& state) {
  const auto lv = mfz::atom_masses(cantor(3), 12);
  for (auto _ : state)
    benchmark::DoNotOptimize(mfz::ref::log_sum_exp_scaled(lv.log_mass, 2.5));
}

void BM_logsumexp_omp(benchmark::State& state) {
  const auto lv = mfz::atom_masses(cantor(3), 12);
  for (auto _ : state) benchmark::DoNotOptimize(mfz::log_sum_exp_scaled(lv.log_mass, 2.5));
}

void BM_jsr_serial(benchmark::State& state) {
  const mfz::DigitSystem sys = cantor(4);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto br = mfz::ref::jsr_bounds(sys, k);
    benchmark::DoNotOptimize(br.lower);
  }
}

void BM_jsr_omp(benchmark::State& state) {
  const mfz::DigitSystem sys = cantor(4);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto br = mfz::jsr_bounds(sys, k);
    benchmark::DoNotOptimize(br.lower);
  }
}

void BM_lyap_mc_serial(benchmark::State& state) {
  const mfz::DigitSystem sys = cantor(3);
  for (auto _ : state) {
    auto r = mfz::ref::lyapunov_sum(sys, 8, mfz::LyapMode::montecarlo, state.range(0), 99u);
    benchmark::DoNotOptimize(r.value);
  }
}

void BM_lyap_mc_omp(benchmark::State& state) {
  const mfz::DigitSystem sys = cantor(3);
  for (auto _ : state) {
    auto r = mfz::lyapunov_sum(sys, 8, mfz::LyapMode::montecarlo, state.range(0), 99u);
    benchmark::DoNotOptimize(r.value);
  }
}

}  // namespace

BENCHMARK(BM_atom_dp_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_atom_dp_omp)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_logsumexp_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_logsumexp_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_jsr_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_jsr_omp)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lyap_mc_serial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lyap_mc_omp)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
