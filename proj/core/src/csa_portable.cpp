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
#include "pospop/csa.hpp"

#include <stdexcept>
#include <string>

#include "detail/backend64.hpp"
#include "detail/csa_engine.hpp"
#include "detail/kernels_internal.hpp"

namespace pospop {
namespace {

thread_local std::uint64_t t_csa_calls = 0;

// Same tree as the production engine, with every CSA evaluation ticking the
// instrumentation counter.
struct CountingBackend64 : detail::Backend64 {
    static void csa(Reg& high, Reg& low, Reg a, Reg b, Reg c) noexcept {
        ++t_csa_calls;
        detail::Backend64::csa(high, low, a, b, c);
    }
};

std::uint32_t resolve_csa_width(std::uint32_t requested) {
    if (requested == 0) return native_csa_width();
    for (const std::uint32_t w : supported_csa_widths())
        if (w == requested) return w;
    throw KernelUnavailableError("kernel unavailable: no CSA backend for " +
                                 std::to_string(requested) + "-bit registers on this host");
}

}  // namespace

std::uint64_t csa_call_count() noexcept { return t_csa_calls; }
void reset_csa_call_count() noexcept { t_csa_calls = 0; }

CsaOutput csa(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    ++t_csa_calls;
    CsaOutput out;
    detail::Backend64::csa(out.high, out.low, a, b, c);
    return out;
}

CarrySet::CarrySet(std::size_t depth_in) : depth(depth_in) {
    if (depth < 2 || depth > 4)
        throw std::invalid_argument("CarrySet depth must be 2, 3 or 4, got " +
                                    std::to_string(depth_in));
}

std::uint64_t csa_block(CarrySet& carries, std::span<const std::uint64_t> inputs) {
    const std::size_t expected = std::size_t{1} << carries.depth;
    if (inputs.size() != expected)
        throw std::invalid_argument("csa_block: expected " + std::to_string(expected) +
                                    " input registers, got " + std::to_string(inputs.size()));
    switch (carries.depth) {
        case 2: return detail::csa_tree<CountingBackend64, 2>(carries.regs.data(), inputs.data());
        case 3: return detail::csa_tree<CountingBackend64, 3>(carries.regs.data(), inputs.data());
        default: return detail::csa_tree<CountingBackend64, 4>(carries.regs.data(), inputs.data());
    }
}

void extract_top(std::uint64_t top, VectorCounterBank& bank) noexcept {
    using B = detail::Backend64;
    const std::uint64_t one = B::ones_epi16();
    for (int pos = 0; pos < 16; ++pos) {
        bank.counter[pos] = B::add_epi16(bank.counter[pos], B::and_reg(top, one));
        top = B::srl1_epi16(top);
    }
    ++bank.blocks_since_flush;
}

void flush_bank(VectorCounterBank& bank, PositionalCounts& counts, std::uint32_t weight) noexcept {
    for (int pos = 0; pos < 16; ++pos)
        counts[pos] += std::uint64_t{weight} * detail::Backend64::lane_sum_u16(bank.counter[pos]);
    bank = VectorCounterBank{};
}

void finalize_carries(const CarrySet& carries, PositionalCounts& counts) noexcept {
    std::array<std::uint16_t, detail::Backend64::lanes> lanes;
    for (std::size_t j = 0; j < carries.depth; ++j) {
        detail::Backend64::store_lanes(carries.regs[j], lanes.data());
        for (const std::uint16_t lane : lanes)
            for (int pos = 0; pos < 16; ++pos)
                counts[pos] += static_cast<std::uint64_t>((lane >> pos) & 1u) << j;
    }
}

namespace detail {

PositionalCounts csa_run_u64(Word16Span words, int block_log2, std::uint32_t flush_threshold) {
    return run_csa_block_log2<Backend64>(words, block_log2, flush_threshold);
}

}  // namespace detail

PositionalCounts pospopcnt_csa(Word16Span words, const PospopcntConfig& config) {
    validate(config);

    int block_log2 = 0;
    switch (config.kernel) {
        case KernelKind::Csa4: block_log2 = 2; break;
        case KernelKind::Csa8: block_log2 = 3; break;
        case KernelKind::Csa16: block_log2 = 4; break;
        default:
            throw std::invalid_argument("pospopcnt_csa requires a CSA kernel (csa4/csa8/csa16)");
    }

    switch (resolve_csa_width(config.register_width_bits)) {
#ifdef POSPOP_HAVE_AVX512_BACKEND
        case 512:
            return detail::csa_run_avx512(words, block_log2, config.flush_threshold_blocks);
#endif
#ifdef POSPOP_HAVE_AVX2_BACKEND
        case 256:
            return detail::csa_run_avx2(words, block_log2, config.flush_threshold_blocks);
#endif
        default:
            return detail::csa_run_u64(words, block_log2, config.flush_threshold_blocks);
    }
}

}  // namespace pospop
