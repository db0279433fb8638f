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
#include <immintrin.h>

#include "detail/csa_engine.hpp"
#include "detail/kernels_internal.hpp"

// 512-bit backend. vpternlogd computes any three-input boolean function in
// one instruction, so the whole CSA is two instructions: the immediate's bit
// at index (4c + 2b + 1a) is the output. 0xE8 selects the majority minterms
// {3,5,6,7} (the carry), 0x96 the parity minterms {1,2,4,7} (the sum).

namespace pospop::detail {
namespace {

struct BackendAvx512 {
    using Reg = __m512i;
    static constexpr std::size_t width_bits = 512;
    static constexpr std::size_t lanes = 32;

    static Reg zero() noexcept { return _mm512_setzero_si512(); }
    static Reg ones_epi16() noexcept { return _mm512_set1_epi16(1); }

    static Reg load(const std::uint16_t* src) noexcept {
        return _mm512_loadu_si512(src);
    }

    static void csa(Reg& high, Reg& low, Reg a, Reg b, Reg c) noexcept {
        high = _mm512_ternarylogic_epi32(c, b, a, 0xE8);
        low = _mm512_ternarylogic_epi32(c, b, a, 0x96);
    }

    static Reg and_reg(Reg a, Reg b) noexcept { return _mm512_and_si512(a, b); }
    static Reg add_epi16(Reg a, Reg b) noexcept { return _mm512_add_epi16(a, b); }
    static Reg srl1_epi16(Reg v) noexcept { return _mm512_srli_epi16(v, 1); }

    // Flush path only; unsigned-safe by going through memory.
    static std::uint64_t lane_sum_u16(Reg v) noexcept {
        alignas(64) std::uint16_t buf[lanes];
        _mm512_store_si512(buf, v);
        std::uint64_t sum = 0;
        for (const std::uint16_t x : buf) sum += x;
        return sum;
    }

    static void store_lanes(Reg v, std::uint16_t* dst) noexcept {
        _mm512_storeu_si512(dst, v);
    }
};

}  // namespace

PositionalCounts csa_run_avx512(Word16Span words, int block_log2, std::uint32_t flush_threshold) {
    return run_csa_block_log2<BackendAvx512>(words, block_log2, flush_threshold);
}

}  // namespace pospop::detail
