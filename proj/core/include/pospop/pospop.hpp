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

namespace pospop {

/// Ground truth: the plain double loop over words and bit positions.
/// Deterministic, configuration-independent and obviously correct; every
/// kernel is required to match it bit for bit.
PositionalCounts oracle_pospopcnt(Word16Span words) noexcept;

/// Positional population count with the configured kernel. All kernels
/// produce identical counts; they differ only in speed. Auto picks
/// ByteBlend for short streams and Csa16 otherwise.
///
/// Throws std::invalid_argument for out-of-range config fields and
/// KernelUnavailableError when the kernel/width pair cannot run here.
PositionalCounts pospopcnt(Word16Span words, const PospopcntConfig& config = {});

}  // namespace pospop
