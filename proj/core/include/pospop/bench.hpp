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
#pragma once

#include "pospop/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

// Measurement harness: deterministic data generation, best-of-reps wall
// timing with an embedded correctness gate, optional hardware counters
// (Linux perf events), CSV emission.

namespace pospop::bench {

/// Same (seed, len) always yields the same stream bytes.
struct DataSpec {
    std::uint64_t seed = 0;
    std::size_t len_words = 0;
};

/// std::mt19937_64 seeded with spec.seed; one word from the low 16 bits of
/// each draw. The generator is fully specified by the C++ standard, so
/// streams reproduce across platforms and toolchains.
std::vector<std::uint16_t> generate_stream(const DataSpec& spec);

struct BenchRecord {
    KernelKind kernel = KernelKind::Auto;
    std::size_t len_words = 0;
    std::uint32_t reps = 0;
    std::uint64_t wall_ns = 0;  ///< best of reps
    double gbps = 0.0;          ///< 2 * len_words / wall_ns (bytes per ns)
    std::optional<double> cycles_per_word;        ///< min cycles / len, when counters readable
    std::optional<double> instructions_per_word;  ///< min instructions / len
    double stderr_pct = 0.0;    ///< 100 * (stddev / sqrt(reps)) / mean of wall times
    std::string error;          ///< non-empty when this cell failed (sweep keeps going)
};

/// True when the cycle/instruction counters can actually be opened on this
/// host. When false, records simply carry empty optionals; nothing aborts.
bool hardware_counters_available() noexcept;

/// Runs `kernel` reps times over the same in-memory stream and keeps the
/// best wall time. Before timing, the kernel's counts are checked against
/// oracle_pospopcnt once; a mismatch throws (no record is produced for a
/// wrong run). KernelUnavailableError propagates.
BenchRecord measure(KernelKind kernel, Word16Span words, std::uint32_t reps,
                    const PospopcntConfig& base = {});

/// Cartesian product of kernels x sizes, size-major. Data is generated from
/// (seed, size) per size. Per-cell failures land in BenchRecord::error and
/// the sweep continues.
std::vector<BenchRecord> sweep(std::span<const KernelKind> kernels,
                               std::span<const std::size_t> sizes,
                               std::uint32_t reps,
                               std::uint64_t seed = 1,
                               const PospopcntConfig& base = {});

inline constexpr std::string_view kCsvHeader =
    "kernel,len_words,reps,wall_ns,gbps,cycles_per_word,instructions_per_word,stderr_pct";

/// Header plus one row per record. Unavailable counters and failed cells
/// leave their numeric fields empty.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace pospop::bench
