// Copyright 2026 The dwf Authors
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

#include "dwf/clifford.hpp"
#include "dwf/kernels.hpp"
#include "dwf/wigner.hpp"

namespace {

const dwf::NetContext &context(int d) {
    static dwf::NetContext c3(dwf::Field::for_dimension(3));
    static dwf::NetContext c4(dwf::Field::for_dimension(4));
    return d == 3 ? c3 : c4;
}

std::vector<std::vector<double>> sample_probs(const dwf::NetContext &ctx) {
    std::mt19937_64 rng(20260101);
    return dwf::probabilities(dwf::random_pure_state(ctx.d(), rng), ctx.mub()).p;
}

void BM_MinOverNetsSerial(benchmark::State &state) {
    const auto &ctx = context(static_cast<int>(state.range(0)));
    auto probs = sample_probs(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwf::kernels::min_over_nets_serial(ctx, probs));
    }
}

void BM_MinOverNetsOmp(benchmark::State &state) {
    const auto &ctx = context(static_cast<int>(state.range(0)));
    auto probs = sample_probs(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwf::kernels::min_over_nets_omp(ctx, probs));
    }
}

void BM_FlowScanSerial(benchmark::State &state) {
    const auto &ctx = context(4);
    auto nets = ctx.all_nets(true);
    auto f = *dwf::fourier_operator(ctx.field()).dense;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwf::kernels::flow_scan_serial(ctx, f, nets, 1e-8));
    }
}

void BM_FlowScanOmp(benchmark::State &state) {
    const auto &ctx = context(4);
    auto nets = ctx.all_nets(true);
    auto f = *dwf::fourier_operator(ctx.field()).dense;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwf::kernels::flow_scan_omp(ctx, f, nets, 1e-8));
    }
}

BENCHMARK(BM_MinOverNetsSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinOverNetsOmp)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlowScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlowScanOmp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
