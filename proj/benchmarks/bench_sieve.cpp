// Copyright 2026 The pntlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "pntlab/arith.hpp"
#include "pntlab/decomposition.hpp"
#include "pntlab/mertens.hpp"
#include "pntlab/progression.hpp"

namespace {

using pntlab::u64;

void BM_SieveMobius(benchmark::State& state) {
    const u64 lo = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pntlab::sieve_mobius(lo, lo + 1'000'000));
    state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_SieveMobius)->Arg(1)->Arg(1'000'000'000)->Unit(benchmark::kMillisecond);

void BM_SieveMangoldt(benchmark::State& state) {
    const u64 lo = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pntlab::sieve_mangoldt(lo, lo + 1'000'000));
    state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_SieveMangoldt)->Arg(1)->Arg(1'000'000'000)->Unit(benchmark::kMillisecond);

void BM_PsiDirect(benchmark::State& state) {
    const auto cls = pntlab::ProgressionClass::coprime(3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pntlab::psi_direct(static_cast<u64>(state.range(0)), cls));
}
BENCHMARK(BM_PsiDirect)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

void BM_MertensSeries(benchmark::State& state) {
    const u64 ys[] = {1'000, 100'000, static_cast<u64>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(pntlab::mertens_series(ys));
}
BENCHMARK(BM_MertensSeries)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_ExactSplitSums(benchmark::State& state) {
    const auto cls = pntlab::ProgressionClass::coprime(4, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(pntlab::exact_split_sums(static_cast<u64>(state.range(0)), cls));
}
BENCHMARK(BM_ExactSplitSums)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
