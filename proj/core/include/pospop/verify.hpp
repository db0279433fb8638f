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

#include <functional>
#include <optional>
#include <string>

namespace pospop {

/// One oracle mismatch, with enough to reproduce it: regenerate the stream
/// from (seed, len), or the single word value, and rerun the kernel.
struct VerifyFailure {
    KernelKind kernel = KernelKind::Auto;
    std::size_t len = 0;
    std::uint64_t seed = 0;
    std::optional<std::uint16_t> single_word;  ///< set for the exhaustive single-word domain
    PositionalCounts expected;
    PositionalCounts actual;
};

struct VerifyReport {
    std::size_t cases_run = 0;
    std::optional<VerifyFailure> first_failure;

    bool ok() const noexcept { return !first_failure.has_value(); }
};

/// Runs `kernel` over `words` with the given config; injectable so the
/// harness itself can be fault-tested.
using KernelRunner = std::function<PositionalCounts(Word16Span, const PospopcntConfig&)>;

/// Compares every kernel against oracle_pospopcnt over (a) the exhaustive
/// single-word domain [0, 65536) and (b) seeded random streams of every
/// length 0..max_len. Stops at the first mismatch. A default-constructed
/// runner means the library's own pospopcnt().
VerifyReport verify_kernels(std::uint64_t seed, std::size_t max_len,
                            std::span<const KernelKind> kernels,
                            const KernelRunner& runner = {});

/// Sixteen-counter diff for a failure, one line per differing position.
std::string format_failure(const VerifyFailure& failure);

}  // namespace pospop
