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

#include <cstddef>
#include <cstdint>

#include "pospop/types.hpp"

// Width-generic carry-save-adder engine. A Backend supplies the register
// type and the handful of lane operations the circuit needs; the circuit
// shape and the flush/drain bookkeeping live here, once, for every width.
// Registers are held in plain arrays (vector types as std::array template
// arguments shed their attributes and trip -Wignored-attributes).

namespace pospop::detail {

// Recursive carry-save tree: consumes 2^Level input registers, updates
// carries[0..Level-1] in place and returns the emitted register of weight
// 2^Level. Doubling the block reuses the half-size tree twice plus one
// combining CSA, so the call count is exactly 2^Level - 1.
template <class B, int Level>
typename B::Reg csa_tree(typename B::Reg* carries, const typename B::Reg* in) {
    if constexpr (Level == 1) {
        typename B::Reg high, low;
        B::csa(high, low, carries[0], in[0], in[1]);
        carries[0] = low;
        return high;
    } else {
        const typename B::Reg first = csa_tree<B, Level - 1>(carries, in);
        const typename B::Reg second =
            csa_tree<B, Level - 1>(carries, in + (std::size_t{1} << (Level - 1)));
        typename B::Reg high, low;
        B::csa(high, low, carries[Level - 1], first, second);
        carries[Level - 1] = low;
        return high;
    }
}

// Sixteen lane-counter registers plus the flush clock. 16-bit lanes cap the
// safe block count at 65535 between flushes.
template <class B>
struct LaneBank {
    typename B::Reg counter[16];
    std::uint32_t blocks_since_flush = 0;

    LaneBank() { clear(); }

    void clear() {
        for (auto& reg : counter) reg = B::zero();
    }

    void extract(typename B::Reg top) {
        const typename B::Reg one = B::ones_epi16();
        for (int pos = 0; pos < 16; ++pos) {
            counter[pos] = B::add_epi16(counter[pos], B::and_reg(top, one));
            top = B::srl1_epi16(top);
        }
        ++blocks_since_flush;
    }

    void flush(PositionalCounts& counts, std::uint32_t weight) {
        for (int pos = 0; pos < 16; ++pos)
            counts[pos] += std::uint64_t{weight} * B::lane_sum_u16(counter[pos]);
        clear();
        blocks_since_flush = 0;
    }
};

// Residual carry drain: bit j of Bj contributes 2^j at position
// (channel index mod 16). Runs once per stream; clarity over speed.
template <class B>
void drain_carries(const typename B::Reg* carries, std::size_t depth, PositionalCounts& counts) {
    std::uint16_t lanes[B::lanes];
    for (std::size_t j = 0; j < depth; ++j) {
        B::store_lanes(carries[j], lanes);
        for (const std::uint16_t lane : lanes)
            for (int pos = 0; pos < 16; ++pos)
                counts[pos] += static_cast<std::uint64_t>((lane >> pos) & 1u) << j;
    }
}

// Full kernel: whole blocks through the circuit, flush whenever the clock
// hits the threshold and once at the end, drain carries, then count the
// tail (less than one block) with plain shift-mask-add.
template <class B, int N>
PositionalCounts run_csa(Word16Span words, std::uint32_t flush_threshold_blocks) {
    constexpr std::size_t regs_per_block = std::size_t{1} << N;
    constexpr std::size_t words_per_reg = B::width_bits / 16;
    constexpr std::size_t words_per_block = regs_per_block * words_per_reg;
    constexpr std::uint32_t weight = 1u << N;

    PositionalCounts counts;
    typename B::Reg carries[N];
    for (auto& reg : carries) reg = B::zero();
    LaneBank<B> bank;

    const std::size_t full_blocks = words.size() / words_per_block;
    const std::uint16_t* src = words.data();
    for (std::size_t block = 0; block < full_blocks; ++block) {
        typename B::Reg in[regs_per_block];
        for (std::size_t r = 0; r < regs_per_block; ++r)
            in[r] = B::load(src + r * words_per_reg);
        bank.extract(csa_tree<B, N>(carries, in));
        if (bank.blocks_since_flush == flush_threshold_blocks)
            bank.flush(counts, weight);
        src += words_per_block;
    }
    bank.flush(counts, weight);
    drain_carries<B>(carries, N, counts);

    for (std::size_t i = full_blocks * words_per_block; i < words.size(); ++i) {
        const std::uint16_t w = words[i];
        for (int pos = 0; pos < 16; ++pos)
            counts[pos] += (w >> pos) & 1u;
    }
    return counts;
}

template <class B>
PositionalCounts run_csa_block_log2(Word16Span words, int block_log2,
                                    std::uint32_t flush_threshold_blocks) {
    switch (block_log2) {
        case 2: return run_csa<B, 2>(words, flush_threshold_blocks);
        case 3: return run_csa<B, 3>(words, flush_threshold_blocks);
        default: return run_csa<B, 4>(words, flush_threshold_blocks);
    }
}

}  // namespace pospop::detail
