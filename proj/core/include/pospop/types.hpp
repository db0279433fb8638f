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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

namespace pospop {

/// A borrowed view over a stream of 16-bit words. Empty streams are valid
/// everywhere.
using Word16Span = std::span<const std::uint16_t>;

/// Sixteen vertical bit sums: counts[p] is the number of words in a stream
/// whose p-th least significant bit is set.
struct PositionalCounts {
    std::array<std::uint64_t, 16> counts{};

    std::uint64_t& operator[](std::size_t pos) { return counts[pos]; }
    const std::uint64_t& operator[](std::size_t pos) const { return counts[pos]; }

    /// Sum over all positions; equals the plain population count of the
    /// stream the counts were taken from.
    std::uint64_t total() const noexcept;

    friend bool operator==(const PositionalCounts&, const PositionalCounts&) = default;
};

/// result[p] = a[p] + b[p]. Associative and commutative: chunks of a stream
/// can be counted independently (in any order, on any thread) and combined.
PositionalCounts merge_counts(const PositionalCounts& a, const PositionalCounts& b) noexcept;

enum class KernelKind {
    ScalarBasic,  ///< shift-mask-add baseline, one word at a time
    Csa4,         ///< carry-save-adder circuit over blocks of 4 registers
    Csa8,         ///< 8 registers
    Csa16,        ///< 16 registers
    Forest,       ///< sixteen trees of pairwise-widening adders
    ByteBlend,    ///< per-byte MSB harvesting, for small inputs
    Auto,         ///< ByteBlend below the size threshold, Csa16 at or above
};

/// CLI-style token ("scalar", "csa16", ...). Stable; used in CSV output.
std::string_view to_string(KernelKind kind) noexcept;
std::optional<KernelKind> kernel_from_string(std::string_view name) noexcept;

/// Thrown when a configuration names a kernel or register width this build
/// or host cannot run.
class KernelUnavailableError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct PospopcntConfig {
    KernelKind kernel = KernelKind::Auto;

    /// Lane-vector width in bits. 0 picks the widest the chosen kernel
    /// supports on this host. Explicit values must be a multiple of 16;
    /// the portable minimum is 64. Widths with no backend raise
    /// KernelUnavailableError.
    std::uint32_t register_width_bits = 0;

    /// Blocks accumulated in the 16-bit lane counters before they are folded
    /// into the 64-bit totals. Range [1, 65535]; the upper bound is what
    /// keeps a 16-bit lane from ever overflowing.
    std::uint32_t flush_threshold_blocks = 65535;

    /// Word count at which Auto switches from ByteBlend to Csa16.
    std::size_t auto_threshold_words = 4096;
};

/// Throws std::invalid_argument when a field is out of range.
void validate(const PospopcntConfig& config);

/// Register widths usable for the CSA kernels on this host, ascending.
/// Always contains 64.
std::span<const std::uint32_t> supported_csa_widths() noexcept;

/// Widest entry of supported_csa_widths().
std::uint32_t native_csa_width() noexcept;

bool cpu_has_avx2() noexcept;
bool cpu_has_avx512bw() noexcept;

}  // namespace pospop
