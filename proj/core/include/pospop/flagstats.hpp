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

#include <string>

// SAM FLAG-field summary statistics, split by QC pass/fail. Two routes:
// the branchy per-word reference and a branchless transform-then-count
// pipeline built on the positional population count. They agree exactly;
// the exhaustive differential over every flag value is the gate.

namespace pospop {

/// SAM FLAG bits (one-hot). Bits 12-15 are unused by the format; bit 12 is
/// claimed internally for a synthesized predicate, so input words must have
/// bits 12-15 clear.
enum FlagBits : std::uint16_t {
    FPAIRED        = 0x0001,
    FPROPER_PAIR   = 0x0002,
    FUNMAP         = 0x0004,
    FMUNMAP        = 0x0008,
    FREVERSE       = 0x0010,
    FMREVERSE      = 0x0020,
    FREAD1         = 0x0040,
    FREAD2         = 0x0080,
    FSECONDARY     = 0x0100,
    FQCFAIL        = 0x0200,
    FDUP           = 0x0400,
    FSUPPLEMENTARY = 0x0800,
};

/// Synthesized during flag_transform: set iff paired, primary,
/// mate mapped and self mapped (the pair_map predicate).
inline constexpr std::uint16_t kPairMapBit = 0x1000;

/// Bits that must be clear on every input word.
inline constexpr std::uint16_t kReservedFlagMask = 0xF000;

struct FlagBucket {
    std::uint64_t total = 0;  ///< words routed to this bucket
    std::uint64_t secondary = 0;
    std::uint64_t supplementary = 0;
    std::uint64_t n_pair_good = 0;
    std::uint64_t n_read1 = 0;
    std::uint64_t n_read2 = 0;
    std::uint64_t n_sgltn = 0;
    std::uint64_t pair_map = 0;
    std::uint64_t mapped = 0;
    std::uint64_t dup = 0;

    friend bool operator==(const FlagBucket&, const FlagBucket&) = default;
};

struct FlagSummary {
    FlagBucket pass;  ///< FQCFAIL clear
    FlagBucket fail;  ///< FQCFAIL set

    std::uint64_t total() const noexcept { return pass.total + fail.total; }

    friend bool operator==(const FlagSummary&, const FlagSummary&) = default;
};

/// A word with any of bits 12-15 set. Both statistics routes throw it, so
/// their input domains are identical.
class InvalidFlagWordError : public std::runtime_error {
  public:
    InvalidFlagWordError(std::size_t offset, std::uint16_t word);

    std::size_t offset() const noexcept { return offset_; }
    std::uint16_t word() const noexcept { return word_; }

  private:
    std::size_t offset_;
    std::uint16_t word_;
};

/// Branchy SAMtools-style reference: QC bucket from FQCFAIL, then the
/// secondary / supplementary / paired elif chain, then the unconditional
/// mapped (!FUNMAP) and dup (!FDUP) updates.
FlagSummary flagstats_reference(Word16Span flags);

/// Mask-select transform of one word. Exactly one of (pass, fail) carries
/// the masked word, routed by FQCFAIL; the other is zero. The masked word
/// keeps FUNMAP, FDUP and FQCFAIL always, strips everything but those (and
/// the secondary/supplementary bits themselves) from secondary or
/// supplementary reads, clears pairing-derived bits on unpaired reads,
/// clears FPROPER_PAIR/FMUNMAP on unmapped reads, and synthesizes
/// kPairMapBit. Callers validate reserved bits; this stays total.
struct FlagTransform {
    std::uint16_t pass;
    std::uint16_t fail;
};

FlagTransform flag_transform(std::uint16_t word) noexcept;

/// Branchless pipeline: flag_transform every word, positional-count the
/// pass and fail streams with the configured kernel, then read the summary
/// straight out of the two count vectors. Equals flagstats_reference
/// exactly on every valid input.
FlagSummary flagstats_pospopcnt(Word16Span flags, const PospopcntConfig& config = {});

/// Two-column, human-readable rendering (one row per field).
std::string format_flag_summary(const FlagSummary& summary);

}  // namespace pospop
