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
#include "pospop/pospop.hpp"

#include <stdexcept>
#include <string>

#include "pospop/csa.hpp"
#include "pospop/kernels.hpp"

namespace pospop {

std::uint64_t PositionalCounts::total() const noexcept {
    std::uint64_t sum = 0;
    for (const std::uint64_t c : counts) sum += c;
    return sum;
}

PositionalCounts merge_counts(const PositionalCounts& a, const PositionalCounts& b) noexcept {
    PositionalCounts out;
    for (std::size_t p = 0; p < 16; ++p) out[p] = a[p] + b[p];
    return out;
}

std::string_view to_string(KernelKind kind) noexcept {
    switch (kind) {
        case KernelKind::ScalarBasic: return "scalar";
        case KernelKind::Csa4: return "csa4";
        case KernelKind::Csa8: return "csa8";
        case KernelKind::Csa16: return "csa16";
        case KernelKind::Forest: return "forest";
        case KernelKind::ByteBlend: return "byteblend";
        case KernelKind::Auto: return "auto";
    }
    return "unknown";
}

std::optional<KernelKind> kernel_from_string(std::string_view name) noexcept {
    if (name == "scalar") return KernelKind::ScalarBasic;
    if (name == "csa4") return KernelKind::Csa4;
    if (name == "csa8") return KernelKind::Csa8;
    if (name == "csa16") return KernelKind::Csa16;
    if (name == "forest") return KernelKind::Forest;
    if (name == "byteblend") return KernelKind::ByteBlend;
    if (name == "auto") return KernelKind::Auto;
    return std::nullopt;
}

void validate(const PospopcntConfig& config) {
    if (config.register_width_bits % 16 != 0)
        throw std::invalid_argument("register_width_bits must be a multiple of 16, got " +
                                    std::to_string(config.register_width_bits));
    if (config.flush_threshold_blocks < 1 || config.flush_threshold_blocks > 65535)
        throw std::invalid_argument("flush_threshold_blocks must be in [1, 65535], got " +
                                    std::to_string(config.flush_threshold_blocks));
}

PositionalCounts oracle_pospopcnt(Word16Span words) noexcept {
    PositionalCounts out;
    for (const std::uint16_t w : words)
        for (std::size_t p = 0; p < 16; ++p)
            out[p] += (w >> p) & 1u;
    return out;
}

PositionalCounts pospopcnt(Word16Span words, const PospopcntConfig& config) {
    validate(config);

    KernelKind kind = config.kernel;
    if (kind == KernelKind::Auto)
        kind = words.size() < config.auto_threshold_words ? KernelKind::ByteBlend
                                                          : KernelKind::Csa16;

    switch (kind) {
        case KernelKind::ScalarBasic:
            return pospopcnt_scalar_basic(words);
        case KernelKind::Forest:
            if (config.register_width_bits > 64)
                throw KernelUnavailableError("kernel unavailable: forest supports 64-bit registers only");
            return pospopcnt_forest(words);
        case KernelKind::ByteBlend:
            // Under Auto, an explicit width is meant for the CSA branch;
            // the small-input branch picks its own widest width.
            return pospopcnt_byteblend(
                words, config.kernel == KernelKind::Auto ? 0 : config.register_width_bits);
        case KernelKind::Csa4:
        case KernelKind::Csa8:
        case KernelKind::Csa16: {
            PospopcntConfig resolved = config;
            resolved.kernel = kind;
            return pospopcnt_csa(words, resolved);
        }
        case KernelKind::Auto:
            break;  // resolved above
    }
    throw std::invalid_argument("unknown kernel");
}

}  // namespace pospop
