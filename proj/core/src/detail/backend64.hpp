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

#include <cstdint>

namespace pospop::detail {

// Portable backend: one uint64_t carries 64 bit-channels = four 16-bit
// lanes. Lane order is value-based (word i at bits [16i, 16i+16)), so the
// code is endianness-independent.
struct Backend64 {
    using Reg = std::uint64_t;
    static constexpr std::size_t width_bits = 64;
    static constexpr std::size_t lanes = 4;

    static Reg zero() noexcept { return 0; }
    static Reg ones_epi16() noexcept { return 0x0001000100010001ull; }

    static Reg load(const std::uint16_t* src) noexcept {
        return static_cast<Reg>(src[0]) | static_cast<Reg>(src[1]) << 16 |
               static_cast<Reg>(src[2]) << 32 | static_cast<Reg>(src[3]) << 48;
    }

    static void csa(Reg& high, Reg& low, Reg a, Reg b, Reg c) noexcept {
        const Reg u = a ^ b;
        high = (a & b) | (u & c);
        low = u ^ c;
    }

    static Reg and_reg(Reg a, Reg b) noexcept { return a & b; }

    // Plain add is lane-safe here: callers keep every lane below 2^16
    // (the flush threshold), so sums never carry across lane boundaries.
    static Reg add_epi16(Reg a, Reg b) noexcept { return a + b; }

    static Reg srl1_epi16(Reg v) noexcept { return (v >> 1) & 0x7FFF7FFF7FFF7FFFull; }

    static std::uint64_t lane_sum_u16(Reg v) noexcept {
        return (v & 0xFFFF) + ((v >> 16) & 0xFFFF) + ((v >> 32) & 0xFFFF) + (v >> 48);
    }

    static void store_lanes(Reg v, std::uint16_t* dst) noexcept {
        dst[0] = static_cast<std::uint16_t>(v);
        dst[1] = static_cast<std::uint16_t>(v >> 16);
        dst[2] = static_cast<std::uint16_t>(v >> 32);
        dst[3] = static_cast<std::uint16_t>(v >> 48);
    }
};

}  // namespace pospop::detail
