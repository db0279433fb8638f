/*
* Copyright (c) 2026 pospopcnt project contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*   http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing,
* software distributed under the License is distributed on an
* "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
* KIND, either express or implied.  See the License for the
* specific language governing permissions and limitations
* under the License.
*/
#include <benchmark/benchmark.h>

#include "pospop/bench.hpp"
#include "pospop/flagstats.hpp"
#include "pospop/pospop.hpp"

// Developer microbenchmarks. The reproducible measurement harness with its
// CSV schema lives in the library (pospop/bench.hpp) and behind
// `pospopcnt bench`; these are for quick local profiling.

namespace {

void BM_Kernel(benchmark::State& state, pospop::KernelKind kind) {
    const auto words = static_cast<std::size_t>(state.range(0));
    const auto data = pospop::bench::generate_stream({42, words});
    pospop::PospopcntConfig config;
    config.kernel = kind;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pospop::pospopcnt(data, config));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * words * 2);
}

void BM_CsaWidth(benchmark::State& state) {
    const auto words = static_cast<std::size_t>(state.range(0));
    const auto width = static_cast<std::uint32_t>(state.range(1));
    bool supported = false;
    for (const std::uint32_t w : pospop::supported_csa_widths()) supported |= (w == width);
    if (!supported) {
        state.SkipWithError("register width not supported on this host");
        return;
    }
    const auto data = pospop::bench::generate_stream({42, words});
    pospop::PospopcntConfig config;
    config.kernel = pospop::KernelKind::Csa16;
    config.register_width_bits = width;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pospop::pospopcnt(data, config));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * words * 2);
}

void BM_Flagstats(benchmark::State& state, bool reference) {
    const auto words = static_cast<std::size_t>(state.range(0));
    auto data = pospop::bench::generate_stream({42, words});
    for (auto& w : data) w &= 0x0FFF;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference ? pospop::flagstats_reference(data)
                                           : pospop::flagstats_pospopcnt(data));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * words * 2);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Kernel, scalar, pospop::KernelKind::ScalarBasic)->Range(1 << 12, 1 << 23);
BENCHMARK_CAPTURE(BM_Kernel, csa4, pospop::KernelKind::Csa4)->Range(1 << 12, 1 << 23);
BENCHMARK_CAPTURE(BM_Kernel, csa8, pospop::KernelKind::Csa8)->Range(1 << 12, 1 << 23);
BENCHMARK_CAPTURE(BM_Kernel, csa16, pospop::KernelKind::Csa16)->Range(1 << 12, 1 << 23);
BENCHMARK_CAPTURE(BM_Kernel, forest, pospop::KernelKind::Forest)->Range(1 << 12, 1 << 23);
BENCHMARK_CAPTURE(BM_Kernel, byteblend, pospop::KernelKind::ByteBlend)->Range(1 << 12, 1 << 23);

BENCHMARK(BM_CsaWidth)
    ->ArgsProduct({{1 << 16, 1 << 21}, {64, 256, 512}})
    ->ArgNames({"words", "width"});

BENCHMARK_CAPTURE(BM_Flagstats, reference, true)->Arg(1 << 18);
BENCHMARK_CAPTURE(BM_Flagstats, pospopcnt, false)->Arg(1 << 18);

BENCHMARK_MAIN();
