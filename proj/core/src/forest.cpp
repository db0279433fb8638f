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
#include "pospop/kernels.hpp"

// Adder forest: all sixteen per-position trees advance together through a
// batch of 16 words. The level-j partial sums for the 16 positions are
// packed as 2^j-bit fields inside machine words; each level widens the
// fields (spread with zeros) before adding, so a field can never overflow:
// level-j values are at most 2^j.
//
//   level 1: 16 x 2-bit fields in a uint32   (value <= 2)
//   level 2: 16 x 4-bit fields in a uint64   (value <= 4)
//   level 3:  8 x 8-bit fields per uint64, low/high position halves (<= 8)
//   level 4: one byte per position           (value <= 16)
//
// Fifteen pairwise additions per batch: 8 + 4 + 2 + 1.

namespace pospop {
namespace {

// Every bit of a 16-bit word into its own 2-bit field.
std::uint32_t spread_1_to_2(std::uint32_t x) noexcept {
    x = (x | (x << 8)) & 0x00FF00FFu;
    x = (x | (x << 4)) & 0x0F0F0F0Fu;
    x = (x | (x << 2)) & 0x33333333u;
    x = (x | (x << 1)) & 0x55555555u;
    return x;
}

// Sixteen 2-bit fields into sixteen 4-bit fields.
std::uint64_t spread_2_to_4(std::uint64_t x) noexcept {
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    return x;
}

// Eight 4-bit fields into eight 8-bit fields.
std::uint64_t spread_4_to_8(std::uint64_t x) noexcept {
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    return x;
}

void add_batch(const std::uint16_t* w, PositionalCounts& counts) noexcept {
    std::uint32_t s2[8];
    for (int i = 0; i < 8; ++i)
        s2[i] = spread_1_to_2(w[2 * i]) + spread_1_to_2(w[2 * i + 1]);

    std::uint64_t s4[4];
    for (int i = 0; i < 4; ++i)
        s4[i] = spread_2_to_4(s2[2 * i]) + spread_2_to_4(s2[2 * i + 1]);

    // Positions 0..7 live in the low 32 bits of each s4 word, 8..15 in the
    // high 32 bits; from here the two halves widen independently.
    std::uint64_t s8_lo[2];
    std::uint64_t s8_hi[2];
    for (int i = 0; i < 2; ++i) {
        s8_lo[i] = spread_4_to_8(static_cast<std::uint32_t>(s4[2 * i])) +
                   spread_4_to_8(static_cast<std::uint32_t>(s4[2 * i + 1]));
        s8_hi[i] = spread_4_to_8(static_cast<std::uint32_t>(s4[2 * i] >> 32)) +
                   spread_4_to_8(static_cast<std::uint32_t>(s4[2 * i + 1] >> 32));
    }

    const std::uint64_t lo = s8_lo[0] + s8_lo[1];
    const std::uint64_t hi = s8_hi[0] + s8_hi[1];
    for (int p = 0; p < 8; ++p) {
        counts[p] += (lo >> (8 * p)) & 0xFF;
        counts[p + 8] += (hi >> (8 * p)) & 0xFF;
    }
}

}  // namespace

PositionalCounts pospopcnt_forest(Word16Span words) noexcept {
    PositionalCounts counts;
    const std::size_t full = words.size() - words.size() % 16;
    for (std::size_t i = 0; i < full; i += 16)
        add_batch(words.data() + i, counts);
    for (std::size_t i = full; i < words.size(); ++i) {
        const std::uint16_t w = words[i];
        for (std::size_t p = 0; p < 16; ++p)
            counts[p] += (w >> p) & 1u;
    }
    return counts;
}

}  // namespace pospop
