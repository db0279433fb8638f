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

// Carry-save-adder kernel family. The hot loops run width-generic circuits
// (64-bit portable, 256-bit AVX2, 512-bit AVX-512); the micro-operations
// below are their 64-bit, desk-testable form. A 64-bit register is viewed
// two ways: as 64 independent 1-bit channels for CSA arithmetic, and as four
// 16-bit lanes for counter extraction.

namespace pospop {

/// One carry-save adder step over 64 channels. Per channel,
/// 2*high + low == a + b + c.
struct CsaOutput {
    std::uint64_t high;
    std::uint64_t low;
};

CsaOutput csa(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept;

/// Carried partial-sum registers B0..B_{N-1}. Channel-wise, sum_j 2^j*bit(Bj)
/// is the residual count of set bits seen since the last finalization
/// (mod 2^N).
struct CarrySet {
    /// depth_in = N, one of 2, 3, 4 (blocks of 4, 8, 16 registers).
    explicit CarrySet(std::size_t depth_in = 2);

    std::array<std::uint64_t, 4> regs{};  ///< B0..B_{N-1}; slots past depth stay zero
    std::size_t depth;
};

/// Feeds one block of 2^depth input registers through the carry-save tree.
/// Carries update in place; the returned top register has weight 2^depth:
/// per channel, new residual + 2^depth*bit(top) == old residual + set input
/// bits. Exactly 2^depth - 1 csa() evaluations.
///
/// Throws std::invalid_argument unless inputs.size() == 2^depth.
std::uint64_t csa_block(CarrySet& carries, std::span<const std::uint64_t> inputs);

/// Sixteen registers of lane counters; counter[p] holds four independent
/// 16-bit counts of the emitted top-register bits at position p.
struct VectorCounterBank {
    std::array<std::uint64_t, 16> counter{};
    std::uint32_t blocks_since_flush = 0;
};

/// Peels the sixteen bit positions out of an emitted top register
/// (mask LSB of each lane, add, shift lanes right) and advances
/// blocks_since_flush. Callers must flush before a lane can reach 2^16,
/// i.e. at least every 65535 blocks.
void extract_top(std::uint64_t top, VectorCounterBank& bank) noexcept;

/// Folds the lane counters into the 64-bit totals scaled by the block weight
/// (2^N; the multiplication deferred out of the hot loop) and zeroes the
/// bank.
void flush_bank(VectorCounterBank& bank, PositionalCounts& counts, std::uint32_t weight) noexcept;

/// Drains the leftover carries once the main loop is done: bit j of Bj adds
/// 2^j at the position given by its channel index mod 16.
void finalize_carries(const CarrySet& carries, PositionalCounts& counts) noexcept;

/// Full CSA kernel: whole blocks through the circuit with overflow-gated
/// flushes, a final flush, carry drain, and a scalar pass over the residual
/// tail (never zero-padded). config.kernel must be Csa4, Csa8 or Csa16.
PositionalCounts pospopcnt_csa(Word16Span words, const PospopcntConfig& config);

/// csa() evaluations made through the micro-ops above on this thread.
/// The fused kernel loops are not counted. Test instrumentation.
std::uint64_t csa_call_count() noexcept;
void reset_csa_call_count() noexcept;

}  // namespace pospop
