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
#include "pospop/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "detail/perf_events.hpp"
#include "pospop/pospop.hpp"

namespace pospop::bench {
namespace {

using Clock = std::chrono::steady_clock;

// Keeps the optimizer from discarding a result it can see through.
void sink(const PositionalCounts& counts) {
    asm volatile("" : : "g"(counts.counts.data()) : "memory");
}

double relative_stderr_pct(const std::vector<std::uint64_t>& samples) {
    if (samples.size() < 2) return 0.0;
    double mean = 0.0;
    for (const std::uint64_t s : samples) mean += static_cast<double>(s);
    mean /= static_cast<double>(samples.size());
    if (mean <= 0.0) return 0.0;
    double var = 0.0;
    for (const std::uint64_t s : samples) {
        const double d = static_cast<double>(s) - mean;
        var += d * d;
    }
    var /= static_cast<double>(samples.size() - 1);
    const double stderr_ns = std::sqrt(var / static_cast<double>(samples.size()));
    return 100.0 * stderr_ns / mean;
}

BenchRecord measure_with_expected(KernelKind kernel, Word16Span words, std::uint32_t reps,
                                  const PospopcntConfig& base,
                                  const PositionalCounts& expected) {
    if (reps < 1) throw std::invalid_argument("measure: reps must be >= 1");

    PospopcntConfig config = base;
    config.kernel = kernel;
    validate(config);

    // Correctness gate: a kernel that disagrees with the oracle produces no
    // record. Doubles as a warm-up pass.
    if (pospopcnt(words, config) != expected)
        throw std::runtime_error("correctness gate: " + std::string(to_string(kernel)) +
                                 " disagrees with the oracle");

    detail::PerfCounters counters;
    std::vector<std::uint64_t> wall(reps);
    std::uint64_t min_cycles = ~std::uint64_t{0};
    std::uint64_t min_instructions = ~std::uint64_t{0};
    bool have_counters = false;

    for (std::uint32_t r = 0; r < reps; ++r) {
        counters.start();
        const auto t0 = Clock::now();
        const PositionalCounts counts = pospopcnt(words, config);
        const auto t1 = Clock::now();
        const auto reading = counters.stop();
        sink(counts);

        wall[r] = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        if (reading) {
            have_counters = true;
            min_cycles = std::min(min_cycles, reading->cycles);
            min_instructions = std::min(min_instructions, reading->instructions);
        }
    }

    BenchRecord rec;
    rec.kernel = kernel;
    rec.len_words = words.size();
    rec.reps = reps;
    rec.wall_ns = *std::min_element(wall.begin(), wall.end());
    if (rec.wall_ns == 0) rec.wall_ns = 1;  // clock granularity floor
    rec.gbps = 2.0 * static_cast<double>(words.size()) / static_cast<double>(rec.wall_ns);
    rec.stderr_pct = relative_stderr_pct(wall);
    if (have_counters && !words.empty()) {
        rec.cycles_per_word = static_cast<double>(min_cycles) / static_cast<double>(words.size());
        rec.instructions_per_word =
            static_cast<double>(min_instructions) / static_cast<double>(words.size());
    }
    return rec;
}

void put_optional(std::ostream& out, const std::optional<double>& v) {
    if (v) out << *v;
}

}  // namespace

std::vector<std::uint16_t> generate_stream(const DataSpec& spec) {
    std::vector<std::uint16_t> out(spec.len_words);
    std::mt19937_64 rng(spec.seed);
    for (std::uint16_t& w : out) w = static_cast<std::uint16_t>(rng());
    return out;
}

bool hardware_counters_available() noexcept {
    detail::PerfCounters probe;
    return probe.available();
}

BenchRecord measure(KernelKind kernel, Word16Span words, std::uint32_t reps,
                    const PospopcntConfig& base) {
    return measure_with_expected(kernel, words, reps, base, oracle_pospopcnt(words));
}

std::vector<BenchRecord> sweep(std::span<const KernelKind> kernels,
                               std::span<const std::size_t> sizes,
                               std::uint32_t reps,
                               std::uint64_t seed,
                               const PospopcntConfig& base) {
    std::vector<BenchRecord> records;
    records.reserve(kernels.size() * sizes.size());
    for (const std::size_t size : sizes) {
        const std::vector<std::uint16_t> stream = generate_stream({seed, size});
        const PositionalCounts expected = oracle_pospopcnt(stream);
        for (const KernelKind kernel : kernels) {
            try {
                records.push_back(measure_with_expected(kernel, stream, reps, base, expected));
            } catch (const std::exception& e) {
                BenchRecord rec;
                rec.kernel = kernel;
                rec.len_words = size;
                rec.reps = reps;
                rec.error = e.what();
                records.push_back(rec);
            }
        }
    }
    return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << kCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        out << to_string(r.kernel) << ',' << r.len_words << ',' << r.reps << ',';
        if (r.error.empty()) {
            out << r.wall_ns << ',' << r.gbps << ',';
            put_optional(out, r.cycles_per_word);
            out << ',';
            put_optional(out, r.instructions_per_word);
            out << ',' << r.stderr_pct;
        } else {
            out << ",,,,";  // failed cell: numeric fields stay empty
        }
        out << '\n';
    }
}

}  // namespace pospop::bench
