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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "common.hpp"
#include "pospop/bench.hpp"
#include "pospop/csa.hpp"
#include "pospop/pospop.hpp"

using namespace pospop;

namespace {

// The ternary-logic immediates of the single-instruction CSA form: bit
// (a + 2b + 4c) of the immediate is the output for inputs (a, b, c).
constexpr unsigned kLowImm = 0b10010110;   // parity, minterms {1,2,4,7}
constexpr unsigned kHighImm = 0b11101000;  // majority, minterms {3,5,6,7}

std::uint64_t bit_of(std::uint64_t v, unsigned idx) { return (v >> idx) & 1u; }

}  // namespace

TEST_CASE("csa: exhaustive single-channel truth table") {
    for (unsigned a = 0; a < 2; ++a)
        for (unsigned b = 0; b < 2; ++b)
            for (unsigned c = 0; c < 2; ++c) {
                const CsaOutput out = csa(a, b, c);
                CHECK(2 * out.high + out.low == a + b + c);
                const unsigned minterm = a + 2 * b + 4 * c;
                CHECK(out.low == bit_of(kLowImm, minterm));
                CHECK(out.high == bit_of(kHighImm, minterm));
            }
}

TEST_CASE("csa: 16-channel example") {
    // Channel sums of (0b1010, 0b0110, 0b1100) are (0,2,2,2).
    const CsaOutput out = csa(0b1010, 0b0110, 0b1100);
    CHECK(out.high == 0b1110);
    CHECK(out.low == 0b0000);
}

TEST_CASE("csa: channel-wise identity on random wide registers") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 2000; ++iter) {
        const std::uint64_t a = rng(), b = rng(), c = rng();
        const CsaOutput out = csa(a, b, c);
        for (unsigned ch = 0; ch < 64; ++ch)
            CHECK(2 * bit_of(out.high, ch) + bit_of(out.low, ch) ==
                  bit_of(a, ch) + bit_of(b, ch) + bit_of(c, ch));
    }
}

TEST_CASE("csa_block: four all-ones inputs, zero carries") {
    CarrySet carries(2);
    const std::vector<std::uint64_t> inputs(4, ~std::uint64_t{0});
    const std::uint64_t top = csa_block(carries, inputs);
    CHECK(top == ~std::uint64_t{0});  // every channel sums to 4 = 0b100
    CHECK(carries.regs[0] == 0);
    CHECK(carries.regs[1] == 0);
}

TEST_CASE("csa_block: carried bit completes a four") {
    CarrySet carries(2);
    carries.regs[0] = 1;  // channel 0 already holds 1
    const std::vector<std::uint64_t> inputs = {1, 1, 1, 0};
    const std::uint64_t top = csa_block(carries, inputs);
    CHECK(top == 1);  // 1 + 3 = 4
    CHECK(carries.regs[0] == 0);
    CHECK(carries.regs[1] == 0);
}

TEST_CASE("csa_block: all zeros in, all zeros out") {
    CarrySet carries(3);
    const std::vector<std::uint64_t> inputs(8, 0);
    CHECK(csa_block(carries, inputs) == 0);
    for (const std::uint64_t reg : carries.regs) CHECK(reg == 0);
}

TEST_CASE("csa_block: wrong input count is rejected before processing") {
    CarrySet carries(2);
    carries.regs[0] = 42;
    const std::vector<std::uint64_t> inputs(5, 1);
    CHECK_THROWS_AS(csa_block(carries, inputs), std::invalid_argument);
    CHECK(carries.regs[0] == 42);  // untouched
}

TEST_CASE("csa_block: exactly 2^N - 1 csa calls") {
    for (const std::size_t depth : {2u, 3u, 4u}) {
        CarrySet carries(depth);
        const std::vector<std::uint64_t> inputs(std::size_t{1} << depth, 0xDEADBEEFull);
        reset_csa_call_count();
        csa_block(carries, inputs);
        CHECK(csa_call_count() == (std::uint64_t{1} << depth) - 1);
    }
}

TEST_CASE("csa_block: conservation across a random block sequence") {
    std::mt19937_64 rng(777);
    for (const std::size_t depth : {2u, 3u, 4u}) {
        CarrySet carries(depth);
        std::vector<std::uint64_t> emitted_per_channel(64, 0);
        std::vector<std::uint64_t> fed_per_channel(64, 0);

        for (int block = 0; block < 25; ++block) {
            std::vector<std::uint64_t> inputs(std::size_t{1} << depth);
            for (auto& in : inputs) {
                in = rng();
                for (unsigned ch = 0; ch < 64; ++ch) fed_per_channel[ch] += bit_of(in, ch);
            }
            const std::uint64_t top = csa_block(carries, inputs);
            for (unsigned ch = 0; ch < 64; ++ch) emitted_per_channel[ch] += bit_of(top, ch);
        }

        for (unsigned ch = 0; ch < 64; ++ch) {
            std::uint64_t residual = 0;
            for (std::size_t j = 0; j < depth; ++j)
                residual += bit_of(carries.regs[j], ch) << j;
            CHECK(residual + (emitted_per_channel[ch] << depth) == fed_per_channel[ch]);
        }
    }
}

TEST_CASE("extract_top: lane examples") {
    VectorCounterBank bank;
    // Lanes [0x0001, 0x0003, 0x0000, 0x0002], lane 0 lowest.
    const std::uint64_t top = 0x0002'0000'0003'0001ull;
    extract_top(top, bank);
    CHECK(bank.blocks_since_flush == 1);
    CHECK(bank.counter[0] == 0x0000'0000'0001'0001ull);  // lanes [1,1,0,0]
    CHECK(bank.counter[1] == 0x0001'0000'0001'0000ull);  // lanes [0,1,0,1]
    for (std::size_t pos = 2; pos < 16; ++pos) CHECK(bank.counter[pos] == 0);
}

TEST_CASE("extract_top: zero register only advances the clock") {
    VectorCounterBank bank;
    extract_top(0, bank);
    CHECK(bank.blocks_since_flush == 1);
    for (const std::uint64_t reg : bank.counter) CHECK(reg == 0);
}

TEST_CASE("extract_top: two all-ones registers") {
    VectorCounterBank bank;
    extract_top(~std::uint64_t{0}, bank);
    extract_top(~std::uint64_t{0}, bank);
    CHECK(bank.blocks_since_flush == 2);
    for (const std::uint64_t reg : bank.counter)
        CHECK(reg == 0x0002'0002'0002'0002ull);  // every lane counted twice
}

TEST_CASE("flush_bank: weighted lane totals") {
    VectorCounterBank bank;
    bank.counter[0] = 0x0001'0000'0002'0003ull;  // lanes [3,2,0,1]
    bank.blocks_since_flush = 3;
    PositionalCounts counts;
    flush_bank(bank, counts, 16);
    CHECK(counts[0] == 96);  // 16 * (3+2+0+1)
    for (std::size_t p = 1; p < 16; ++p) CHECK(counts[p] == 0);
    CHECK(bank.blocks_since_flush == 0);
    for (const std::uint64_t reg : bank.counter) CHECK(reg == 0);
}

TEST_CASE("flush_bank: empty bank adds nothing; flush is idempotent") {
    VectorCounterBank bank;
    PositionalCounts counts;
    counts[3] = 7;
    flush_bank(bank, counts, 4);
    flush_bank(bank, counts, 4);
    CHECK(counts[3] == 7);
    CHECK(counts.total() == 7);
}

TEST_CASE("finalize_carries: weights 1 and 2") {
    CarrySet carries(2);
    carries.regs[0] = 0x0010;  // channel 4, weight 1
    carries.regs[1] = 0x0001;  // channel 0, weight 2
    PositionalCounts counts;
    finalize_carries(carries, counts);
    CHECK(counts[4] == 1);
    CHECK(counts[0] == 2);
    CHECK(counts.total() == 3);
}

TEST_CASE("finalize_carries: zero carries leave counts untouched") {
    CarrySet carries(4);
    PositionalCounts counts;
    counts[9] = 5;
    finalize_carries(carries, counts);
    CHECK(counts[9] == 5);
    CHECK(counts.total() == 5);
}

TEST_CASE("finalize_carries: all-ones B2 adds 4 per lane at weight 4") {
    CarrySet carries(3);
    carries.regs[2] = ~std::uint64_t{0};
    PositionalCounts counts;
    finalize_carries(carries, counts);
    for (std::size_t p = 0; p < 16; ++p) CHECK(counts[p] == 16);  // 4 lanes * weight 4
}

TEST_CASE("pospopcnt_csa: empty stream") {
    for (const KernelKind kind : {KernelKind::Csa4, KernelKind::Csa8, KernelKind::Csa16}) {
        PospopcntConfig config;
        config.kernel = kind;
        CHECK(pospopcnt_csa({}, config) == PositionalCounts{});
    }
}

TEST_CASE("pospopcnt_csa: country stream is pure residue at width >= 64") {
    const auto stream = testdata::country_stream();
    PospopcntConfig config;
    config.kernel = KernelKind::Csa16;
    const PositionalCounts counts = pospopcnt_csa(stream, config);
    CHECK(counts[0] == 4);
    CHECK(counts[2] == 2);
    CHECK(counts[4] == 3);
    CHECK(counts[5] == 1);
    CHECK(counts.total() == 10);
}

TEST_CASE("pospopcnt_csa: all block sizes and widths match the oracle") {
    const auto stream = bench::generate_stream({40, 5000});
    const PositionalCounts expected = oracle_pospopcnt(stream);
    for (const KernelKind kind : {KernelKind::Csa4, KernelKind::Csa8, KernelKind::Csa16}) {
        for (const std::uint32_t width : supported_csa_widths()) {
            INFO("kernel=", to_string(kind), " width=", width);
            PospopcntConfig config;
            config.kernel = kind;
            config.register_width_bits = width;
            CHECK(pospopcnt_csa(stream, config) == expected);
        }
    }
}

TEST_CASE("pospopcnt_csa: forced flushing with a tiny threshold") {
    // Threshold 3 forces a flush every three blocks; lengths are chosen so
    // every width/block combination sees at least two flushes plus a tail.
    std::mt19937_64 rng(555);
    for (const std::size_t len : {4000u, 9000u}) {
        const auto stream = bench::generate_stream({rng(), len});
        const PositionalCounts expected = oracle_pospopcnt(stream);
        for (const KernelKind kind : {KernelKind::Csa4, KernelKind::Csa8, KernelKind::Csa16}) {
            for (const std::uint32_t width : supported_csa_widths()) {
                PospopcntConfig config;
                config.kernel = kind;
                config.register_width_bits = width;
                config.flush_threshold_blocks = 3;
                INFO("kernel=", to_string(kind), " width=", width, " len=", len);
                CHECK(pospopcnt_csa(stream, config) == expected);
            }
        }
    }
}

TEST_CASE("pospopcnt_csa: threshold 1 flushes every block") {
    const auto stream = bench::generate_stream({8, 1000});
    PospopcntConfig config;
    config.kernel = KernelKind::Csa4;
    config.flush_threshold_blocks = 1;
    CHECK(pospopcnt_csa(stream, config) == oracle_pospopcnt(stream));
}

TEST_CASE("pospopcnt_csa: lengths that are not block multiples") {
    std::mt19937_64 rng(2);
    for (const std::size_t len : {1u, 3u, 63u, 64u, 65u, 511u, 512u, 513u, 1023u}) {
        const auto stream = bench::generate_stream({rng(), len});
        const PositionalCounts expected = oracle_pospopcnt(stream);
        for (const KernelKind kind : {KernelKind::Csa4, KernelKind::Csa8, KernelKind::Csa16}) {
            PospopcntConfig config;
            config.kernel = kind;
            INFO("kernel=", to_string(kind), " len=", len);
            CHECK(pospopcnt_csa(stream, config) == expected);
        }
    }
}

TEST_CASE("pospopcnt_csa: lane counters survive the default flush threshold") {
    // All-ones input increments every lane once per block, so after 65535
    // blocks each 16-bit lane counter sits at its maximum. One extra block
    // plus a tail proves the flush fired before any lane could wrap.
    constexpr std::size_t words_per_block = 16 * 4;  // csa4 at 64-bit registers
    const std::vector<std::uint16_t> stream(words_per_block * 65536 + 3, 0xFFFF);
    PospopcntConfig config;
    config.kernel = KernelKind::Csa4;
    config.register_width_bits = 64;
    const PositionalCounts counts = pospopcnt_csa(stream, config);
    for (std::size_t p = 0; p < 16; ++p) CHECK(counts[p] == stream.size());
}

TEST_CASE("pospopcnt_csa: rejects non-CSA kernels") {
    PospopcntConfig config;
    config.kernel = KernelKind::ScalarBasic;
    CHECK_THROWS_AS(pospopcnt_csa({}, config), std::invalid_argument);
}

TEST_CASE("CarrySet: depth must be 2, 3 or 4") {
    CHECK_THROWS_AS(CarrySet(1), std::invalid_argument);
    CHECK_THROWS_AS(CarrySet(5), std::invalid_argument);
    CHECK_NOTHROW(CarrySet(3));
}
