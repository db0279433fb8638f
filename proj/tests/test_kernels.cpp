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
#include "pospop/kernels.hpp"
#include "pospop/pospop.hpp"

using namespace pospop;

TEST_CASE("scalar: empty, country, random") {
    CHECK(pospopcnt_scalar_basic({}) == PositionalCounts{});

    const auto country = testdata::country_stream();
    const PositionalCounts counts = pospopcnt_scalar_basic(country);
    CHECK(counts[0] == 4);
    CHECK(counts[2] == 2);
    CHECK(counts[4] == 3);
    CHECK(counts[5] == 1);

    const auto stream = bench::generate_stream({1, 1000});
    CHECK(pospopcnt_scalar_basic(stream) == oracle_pospopcnt(stream));
}

TEST_CASE("forest: one saturated tree") {
    const std::vector<std::uint16_t> stream(16, 0x0001);
    const PositionalCounts counts = pospopcnt_forest(stream);
    CHECK(counts[0] == 16);
    for (std::size_t p = 1; p < 16; ++p) CHECK(counts[p] == 0);
}

TEST_CASE("forest: empty and random") {
    CHECK(pospopcnt_forest({}) == PositionalCounts{});
    const auto stream = bench::generate_stream({2, 2048});
    CHECK(pospopcnt_forest(stream) == oracle_pospopcnt(stream));
}

TEST_CASE("forest: batch boundaries") {
    std::mt19937_64 rng(3);
    for (const std::size_t len : {1u, 15u, 16u, 17u, 31u, 32u, 33u, 160u}) {
        const auto stream = bench::generate_stream({rng(), len});
        INFO("len=", len);
        CHECK(pospopcnt_forest(stream) == oracle_pospopcnt(stream));
    }
}

TEST_CASE("byteblend: single 0x8000 word lands in the first mask round") {
    const std::uint16_t w = 0x8000;
    const PositionalCounts counts = pospopcnt_byteblend(Word16Span(&w, 1));
    CHECK(counts[15] == 1);
    CHECK(counts.total() == 1);
}

TEST_CASE("byteblend: full-register trace of the first round") {
    // Four copies fill one portable register, exercising the blended path
    // rather than the scalar tail.
    const std::vector<std::uint16_t> stream(4, 0x8000);
    const PositionalCounts counts = pospopcnt_byteblend(stream, 64);
    CHECK(counts[15] == 4);
    CHECK(counts.total() == 4);
}

TEST_CASE("byteblend: round-to-position mapping, one word per bit") {
    // Sixteen one-hot words, each repeated across a register boundary.
    for (unsigned bit = 0; bit < 16; ++bit) {
        const std::vector<std::uint16_t> stream(16, static_cast<std::uint16_t>(1u << bit));
        const PositionalCounts counts = pospopcnt_byteblend(stream, 64);
        INFO("bit=", bit);
        CHECK(counts[bit] == 16);
        CHECK(counts.total() == 16);
    }
}

TEST_CASE("byteblend: empty and random") {
    CHECK(pospopcnt_byteblend({}) == PositionalCounts{});
    const auto stream = bench::generate_stream({4, 512});
    CHECK(pospopcnt_byteblend(stream) == oracle_pospopcnt(stream));
}

TEST_CASE("byteblend: widths agree with the oracle") {
    const auto stream = bench::generate_stream({5, 777});
    const PositionalCounts expected = oracle_pospopcnt(stream);
    CHECK(pospopcnt_byteblend(stream, 64) == expected);
    if (cpu_has_avx2()) CHECK(pospopcnt_byteblend(stream, 256) == expected);
    CHECK_THROWS_AS(pospopcnt_byteblend(stream, 512), KernelUnavailableError);
}

TEST_CASE("all alternative kernels: random lengths vs oracle") {
    std::mt19937_64 rng(1000);
    for (int iter = 0; iter < 30; ++iter) {
        const std::size_t len = rng() % 2000;
        const auto stream = bench::generate_stream({rng(), len});
        const PositionalCounts expected = oracle_pospopcnt(stream);
        INFO("len=", len);
        CHECK(pospopcnt_scalar_basic(stream) == expected);
        CHECK(pospopcnt_forest(stream) == expected);
        CHECK(pospopcnt_byteblend(stream) == expected);
    }
}

TEST_CASE("all alternative kernels: exhaustive single-word domain") {
    for (std::uint32_t value = 0; value < 65536; ++value) {
        const auto word = static_cast<std::uint16_t>(value);
        const Word16Span one(&word, 1);
        PositionalCounts expected;
        for (std::size_t p = 0; p < 16; ++p) expected[p] = (value >> p) & 1u;
        if (pospopcnt_scalar_basic(one) != expected) {
            FAIL("scalar mismatch at ", value);
        }
        if (pospopcnt_forest(one) != expected) {
            FAIL("forest mismatch at ", value);
        }
        if (pospopcnt_byteblend(one) != expected) {
            FAIL("byteblend mismatch at ", value);
        }
    }
}
