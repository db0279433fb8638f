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
#include "pospop/verify.hpp"

#include <sstream>

#include "pospop/bench.hpp"
#include "pospop/pospop.hpp"

namespace pospop {
namespace {

PositionalCounts run_default(Word16Span words, const PospopcntConfig& config) {
    return pospopcnt(words, config);
}

}  // namespace

VerifyReport verify_kernels(std::uint64_t seed, std::size_t max_len,
                            std::span<const KernelKind> kernels,
                            const KernelRunner& runner) {
    const KernelRunner& run = runner ? runner : KernelRunner(run_default);
    VerifyReport report;

    // Exhaustive single-word domain.
    for (std::uint32_t value = 0; value < 65536; ++value) {
        const auto word = static_cast<std::uint16_t>(value);
        PositionalCounts expected;
        for (std::size_t p = 0; p < 16; ++p) expected[p] = (value >> p) & 1u;
        for (const KernelKind kernel : kernels) {
            PospopcntConfig config;
            config.kernel = kernel;
            const PositionalCounts actual = run(Word16Span(&word, 1), config);
            ++report.cases_run;
            if (actual != expected) {
                report.first_failure =
                    VerifyFailure{kernel, 1, seed, word, expected, actual};
                return report;
            }
        }
    }

    // Seeded random streams of every length up to max_len. Ascending order,
    // so the first failure is also the shortest reproduction.
    for (std::size_t len = 0; len <= max_len; ++len) {
        const std::vector<std::uint16_t> stream = bench::generate_stream({seed, len});
        const PositionalCounts expected = oracle_pospopcnt(stream);
        for (const KernelKind kernel : kernels) {
            PospopcntConfig config;
            config.kernel = kernel;
            const PositionalCounts actual = run(stream, config);
            ++report.cases_run;
            if (actual != expected) {
                report.first_failure =
                    VerifyFailure{kernel, len, seed, std::nullopt, expected, actual};
                return report;
            }
        }
    }
    return report;
}

std::string format_failure(const VerifyFailure& f) {
    std::ostringstream os;
    os << "kernel " << to_string(f.kernel);
    if (f.single_word)
        os << " on single word 0x" << std::hex << *f.single_word << std::dec;
    else
        os << " on stream (seed=" << f.seed << ", len=" << f.len << ")";
    os << " disagrees with the oracle:\n";
    for (std::size_t p = 0; p < 16; ++p) {
        if (f.expected[p] == f.actual[p]) continue;
        os << "  bit " << p << ": expected " << f.expected[p] << ", got " << f.actual[p] << '\n';
    }
    return os.str();
}

}  // namespace pospop
