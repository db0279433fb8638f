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
#include "pospop/types.hpp"

#include <vector>

namespace pospop {

bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

bool cpu_has_avx512bw() noexcept {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx512bw") != 0;
#else
    return false;
#endif
}

std::span<const std::uint32_t> supported_csa_widths() noexcept {
    static const std::vector<std::uint32_t> widths = [] {
        std::vector<std::uint32_t> w{64};
#ifdef POSPOP_HAVE_AVX2_BACKEND
        if (cpu_has_avx2()) w.push_back(256);
#endif
#ifdef POSPOP_HAVE_AVX512_BACKEND
        if (cpu_has_avx512bw()) w.push_back(512);
#endif
        return w;
    }();
    return widths;
}

std::uint32_t native_csa_width() noexcept {
    return supported_csa_widths().back();
}

}  // namespace pospop
