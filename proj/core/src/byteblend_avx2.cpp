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

#include <bit>

#include "detail/kernels_internal.hpp"

// AVX2 byte-blend: vpmovmskb grabs the MSB of all 32 bytes at once. Even
// mask bits come from low bytes (positions 7-r), odd bits from high bytes
// (positions 15-r); partitioning the mask replaces the physical byte blend.
// The byte-wise shift is a self-addition, which has better throughput than
// an actual shift.

namespace pospop::detail {

PositionalCounts byteblend_run_avx2(Word16Span words) {
    PositionalCounts counts;
    const std::size_t full = words.size() - words.size() % 16;
    for (std::size_t i = 0; i < full; i += 16) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i));
        for (int r = 0; r < 8; ++r) {
            const auto m = static_cast<std::uint32_t>(_mm256_movemask_epi8(v));
            counts[15 - r] += std::popcount(m & 0xAAAAAAAAu);
            counts[7 - r] += std::popcount(m & 0x55555555u);
            v = _mm256_add_epi8(v, v);
        }
    }
    for (std::size_t i = full; i < words.size(); ++i) {
        const std::uint16_t w = words[i];
        for (std::size_t p = 0; p < 16; ++p)
            counts[p] += (w >> p) & 1u;
    }
    return counts;
}

}  // namespace pospop::detail
