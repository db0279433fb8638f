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

#include <bit>
#include <string>

#include "detail/backend64.hpp"
#include "detail/kernels_internal.hpp"

// Byte-blend kernel. Each 16-bit word contributes a low byte (bits 0..7)
// and a high byte (bits 8..15). Round r harvests the MSB of every byte into
// a mask (high bytes feed position 15-r, low bytes 7-r), then shifts every
// byte left by one. After eight rounds every bit has passed through its
// byte's MSB exactly once. The SIMD form shifts via byte-wise
// self-addition; the portable form masks the cross-byte carries.

namespace pospop {
namespace detail {

PositionalCounts byteblend_run_u64(Word16Span words) {
    constexpr std::uint64_t kMsbEveryByte = 0x8080808080808080ull;
    constexpr std::uint64_t kHighByteMsbs = 0x8000800080008000ull;
    constexpr std::uint64_t kLowByteMsbs = 0x0080008000800080ull;

    PositionalCounts counts;
    const std::size_t full = words.size() - words.size() % 4;
    for (std::size_t i = 0; i < full; i += 4) {
        std::uint64_t v = Backend64::load(words.data() + i);
        for (int r = 0; r < 8; ++r) {
            const std::uint64_t m = v & kMsbEveryByte;
            counts[15 - r] += std::popcount(m & kHighByteMsbs);
            counts[7 - r] += std::popcount(m & kLowByteMsbs);
            v = (v << 1) & ~0x0101010101010101ull;
        }
    }
    for (std::size_t i = full; i < words.size(); ++i) {
        const std::uint16_t w = words[i];
        for (std::size_t p = 0; p < 16; ++p)
            counts[p] += (w >> p) & 1u;
    }
    return counts;
}

}  // namespace detail

PositionalCounts pospopcnt_byteblend(Word16Span words, std::uint32_t register_width_bits) {
    if (register_width_bits % 16 != 0)
        throw std::invalid_argument("register_width_bits must be a multiple of 16, got " +
                                    std::to_string(register_width_bits));
#ifdef POSPOP_HAVE_AVX2_BACKEND
    const bool want_avx2 = register_width_bits == 256 ||
                           (register_width_bits == 0 && cpu_has_avx2());
    if (want_avx2) {
        if (!cpu_has_avx2())
            throw KernelUnavailableError("kernel unavailable: byteblend at 256 bits needs AVX2");
        return detail::byteblend_run_avx2(words);
    }
#else
    if (register_width_bits == 256)
        throw KernelUnavailableError("kernel unavailable: byteblend 256-bit backend not compiled in");
#endif
    if (register_width_bits != 0 && register_width_bits != 64)
        throw KernelUnavailableError("kernel unavailable: byteblend supports 64- or 256-bit registers, got " +
                                     std::to_string(register_width_bits));
    return detail::byteblend_run_u64(words);
}

}  // namespace pospop
