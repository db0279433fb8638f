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

namespace pospop {

/// Shift-mask-add baseline: sixteen unrolled counter updates per word,
/// branchless inner body. This is the production twin of oracle_pospopcnt;
/// its translation unit is built with auto-vectorization disabled so the
/// benchmark's scalar rows stay genuinely scalar.
PositionalCounts pospopcnt_scalar_basic(Word16Span words) noexcept;

/// Adder forest: sixteen trees of pairwise-widening adders, one per bit
/// position. Batches of 16 words run through packed 1 -> 2 -> 4 -> 8 bit
/// partial-sum fields (fifteen pairwise additions per batch); the tail goes
/// through the scalar kernel.
PositionalCounts pospopcnt_forest(Word16Span words) noexcept;

/// Byte-blend small-input kernel: eight rounds per register, each harvesting
/// the MSB of every byte into a mask (counted into positions 15-r and 7-r)
/// and then shifting every byte left by one. Tail via the scalar kernel.
/// register_width_bits: 0 = widest available, 64 = portable, 256 = AVX2.
PositionalCounts pospopcnt_byteblend(Word16Span words, std::uint32_t register_width_bits = 0);

}  // namespace pospop
