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

// 256-bit backend. The CSA keeps the 5-operation form; AVX2 has no ternary
// logic instruction.

namespace pospop::detail {
namespace {

struct BackendAvx2 {
    using Reg = __m256i;
    static constexpr std::size_t width_bits = 256;
    static constexpr std::size_t lanes = 16;

    static Reg zero() noexcept { return _mm256_setzero_si256(); }
    static Reg ones_epi16() noexcept { return _mm256_set1_epi16(1); }

    static Reg load(const std::uint16_t* src) noexcept {
        return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src));
    }

    static void csa(Reg& high, Reg& low, Reg a, Reg b, Reg c) noexcept {
        const Reg u = _mm256_xor_si256(a, b);
        high = _mm256_or_si256(_mm256_and_si256(a, b), _mm256_and_si256(u, c));
        low = _mm256_xor_si256(u, c);
    }

    static Reg and_reg(Reg a, Reg b) noexcept { return _mm256_and_si256(a, b); }
    static Reg add_epi16(Reg a, Reg b) noexcept { return _mm256_add_epi16(a, b); }
    static Reg srl1_epi16(Reg v) noexcept { return _mm256_srli_epi16(v, 1); }

    // Flush path only; unsigned-safe by going through memory.
    static std::uint64_t lane_sum_u16(Reg v) noexcept {
        alignas(32) std::uint16_t buf[lanes];
        _mm256_store_si256(reinterpret_cast<__m256i*>(buf), v);
        std::uint64_t sum = 0;
        for (const std::uint16_t x : buf) sum += x;
        return sum;
    }

    static void store_lanes(Reg v, std::uint16_t* dst) noexcept {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst), v);
    }
};

}  // namespace

PositionalCounts csa_run_avx2(Word16Span words, int block_log2, std::uint32_t flush_threshold) {
    return run_csa_block_log2<BackendAvx2>(words, block_log2, flush_threshold);
}

}  // namespace pospop::detail
