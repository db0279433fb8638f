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

// This translation unit is compiled with auto-vectorization disabled (see
// core/CMakeLists.txt) so benchmark rows labelled "scalar" measure genuinely
// scalar code.

namespace pospop {

PositionalCounts pospopcnt_scalar_basic(Word16Span words) noexcept {
    std::uint64_t c[16] = {0};
    for (const std::uint16_t w : words) {
        c[0] += (w >> 0) & 1u;
        c[1] += (w >> 1) & 1u;
        c[2] += (w >> 2) & 1u;
        c[3] += (w >> 3) & 1u;
        c[4] += (w >> 4) & 1u;
        c[5] += (w >> 5) & 1u;
        c[6] += (w >> 6) & 1u;
        c[7] += (w >> 7) & 1u;
        c[8] += (w >> 8) & 1u;
        c[9] += (w >> 9) & 1u;
        c[10] += (w >> 10) & 1u;
        c[11] += (w >> 11) & 1u;
        c[12] += (w >> 12) & 1u;
        c[13] += (w >> 13) & 1u;
        c[14] += (w >> 14) & 1u;
        c[15] += (w >> 15) & 1u;
    }
    PositionalCounts out;
    for (std::size_t p = 0; p < 16; ++p) out[p] = c[p];
    return out;
}

}  // namespace pospop
