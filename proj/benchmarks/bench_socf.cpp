// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Micro-benchmarks for the hot paths: digit extraction per backend, the
// induced transformation, streaming contracted expansion, and the two
// measure routes.  All inputs are fixed so runs are comparable.

#include <benchmark/benchmark.h>

#include <fstream>
#include <stdexcept>
#include <string>

#include "socf/induction.hpp"
#include "socf/measure.hpp"
#include "socf/region.hpp"
#include "socf/surd.hpp"
#include "socf/tail_source.hpp"

#ifndef SOCF_BENCH_DATA_DIR
#error "SOCF_BENCH_DATA_DIR must point at the tests/data directory"
#endif

namespace {

using namespace socf;

const std::string& pi_minus_3() {
  static const std::string cached = [] {
    std::ifstream in(std::string(SOCF_BENCH_DATA_DIR) + "/pi_minus_3_500.txt");
    std::string line;
    std::getline(in, line);
    if (line.empty()) throw std::runtime_error("missing decimal fixture");
    return line;
  }();
  return cached;
}

void BM_DigitsSurd(benchmark::State& state) {
  const SurdValue x(-1, 1, 1, 2);  // sqrt(2) - 1
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TailSource src = TailSource::from_surd(x);
    Int last = 0;
    for (int i = 0; i < n; ++i) last = src.next_digit();
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_DigitsSurd)->Arg(50)->Arg(200);

void BM_DigitsDecimal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TailSource src = TailSource::from_decimal(pi_minus_3());
    Int last = 0;
    for (int i = 0; i < n; ++i) last = src.next_digit();
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_DigitsDecimal)->Arg(50)->Arg(200);

void BM_DigitsRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TailSource src = TailSource::random(20260816);
    Int last = 0;
    for (int i = 0; i < n; ++i) last = src.next_digit();
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_DigitsRandom)->Arg(50)->Arg(200);

void BM_InducedSteps(benchmark::State& state) {
  const Region h = builtin_hurwitz();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    NEPoint z{TailSource::random(20260816), BigFraction(0), 0};
    std::size_t j_total = 0;
    for (int i = 0; i < n; ++i) j_total += induced_step(h, z).j;
    benchmark::DoNotOptimize(j_total);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_InducedSteps)->Arg(50)->Arg(200);

void BM_SocfStream(benchmark::State& state) {
  const Region r = builtin_jump(2);
  for (auto _ : state) {
    SocfStream stream(r, TailSource::from_decimal(pi_minus_3()));
    Int q = 0;
    for (int k = 0; k <= 11; ++k) q = stream.next().Q;
    benchmark::DoNotOptimize(q);
  }
  state.SetItemsProcessed(state.iterations() * 12);
}
BENCHMARK(BM_SocfStream);

void BM_MeasureClosedForm(benchmark::State& state) {
  const Region h = builtin_hurwitz();
  for (auto _ : state) {
    MeasureResult m = measure(h);
    benchmark::DoNotOptimize(m.value);
  }
}
BENCHMARK(BM_MeasureClosedForm);

void BM_MeasureDarboux(benchmark::State& state) {
  const Region h = builtin_hurwitz();
  const double tol = 1e-3;
  for (auto _ : state) {
    DarbouxResult db = measure_darboux(h, tol);
    benchmark::DoNotOptimize(db.upper);
  }
}
BENCHMARK(BM_MeasureDarboux);

}  // namespace

BENCHMARK_MAIN();
