// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <benchmark/benchmark.h>

#include "hfl/hierarchy.hpp"

namespace {

// Bases of growing size: the stages L_2 and L_3 and a closure step above L_2.
hfl::HFSet base(int which) {
    switch (which) {
    case 0: return hfl::ll_level(2u);
    case 1: return hfl::d_small(hfl::numeral(5));
    default: return hfl::ll_level(3u);
    }
}

void BM_closure_parallel(benchmark::State &state) {
    const hfl::HFSet b = base(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hfl::d_small(b));
    state.counters["base"] = static_cast<double>(b.size());
}

void BM_closure_serial(benchmark::State &state) {
    const hfl::HFSet b = base(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hfl::d_small_serial(b));
    state.counters["base"] = static_cast<double>(b.size());
}

} // namespace

BENCHMARK(BM_closure_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
