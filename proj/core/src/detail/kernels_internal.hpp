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

// Backend entry points. The ISA-specific translation units are compiled
// with their own -m flags and only ever called after a runtime CPU check.

namespace pospop::detail {

PositionalCounts csa_run_u64(Word16Span words, int block_log2, std::uint32_t flush_threshold);
PositionalCounts byteblend_run_u64(Word16Span words);

#ifdef POSPOP_HAVE_AVX2_BACKEND
PositionalCounts csa_run_avx2(Word16Span words, int block_log2, std::uint32_t flush_threshold);
PositionalCounts byteblend_run_avx2(Word16Span words);
#endif

#ifdef POSPOP_HAVE_AVX512_BACKEND
PositionalCounts csa_run_avx512(Word16Span words, int block_log2, std::uint32_t flush_threshold);
#endif

}  // namespace pospop::detail
