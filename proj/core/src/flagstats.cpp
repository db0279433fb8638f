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
#include "pospop/flagstats.hpp"

#include <sstream>
#include <vector>

#include "pospop/pospop.hpp"

namespace pospop {
namespace {

std::string describe_invalid(std::size_t offset, std::uint16_t word) {
    std::ostringstream os;
    os << "invalid FLAG word 0x" << std::hex << word << std::dec << " at offset " << offset
       << " (bits 12-15 must be clear)";
    return os.str();
}

void check_reserved(std::size_t offset, std::uint16_t word) {
    if (word & kReservedFlagMask) throw InvalidFlagWordError(offset, word);
}

// Field positions in the transformed word / its positional counts.
constexpr std::size_t kPosProperPair = 1;    // n_pair_good
constexpr std::size_t kPosUnmapped = 2;      // mapped = total - counts[2]
constexpr std::size_t kPosMateUnmapped = 3;  // n_sgltn
constexpr std::size_t kPosRead1 = 6;
constexpr std::size_t kPosRead2 = 7;
constexpr std::size_t kPosSecondary = 8;
constexpr std::size_t kPosQcFail = 9;        // fail-bucket total
constexpr std::size_t kPosDup = 10;          // dup = total - counts[10]
constexpr std::size_t kPosSupplementary = 11;
constexpr std::size_t kPosPairMap = 12;

FlagBucket bucket_from_counts(const PositionalCounts& c, std::uint64_t total) {
    FlagBucket b;
    b.total = total;
    b.secondary = c[kPosSecondary];
    b.supplementary = c[kPosSupplementary];
    b.n_pair_good = c[kPosProperPair];
    b.n_read1 = c[kPosRead1];
    b.n_read2 = c[kPosRead2];
    b.n_sgltn = c[kPosMateUnmapped];
    b.pair_map = c[kPosPairMap];
    b.mapped = total - c[kPosUnmapped];
    b.dup = total - c[kPosDup];
    return b;
}

}  // namespace

InvalidFlagWordError::InvalidFlagWordError(std::size_t offset, std::uint16_t word)
    : std::runtime_error(describe_invalid(offset, word)), offset_(offset), word_(word) {}

FlagSummary flagstats_reference(Word16Span flags) {
    FlagSummary out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        const std::uint16_t c = flags[i];
        check_reserved(i, c);
        FlagBucket& b = (c & FQCFAIL) ? out.fail : out.pass;
        ++b.total;
        if (c & FSECONDARY) {
            ++b.secondary;
        } else if (c & FSUPPLEMENTARY) {
            ++b.supplementary;
        } else if (c & FPAIRED) {
            if ((c & FPROPER_PAIR) && !(c & FUNMAP)) ++b.n_pair_good;
            if (c & FREAD1) ++b.n_read1;
            if (c & FREAD2) ++b.n_read2;
            if ((c & FMUNMAP) && !(c & FUNMAP)) ++b.n_sgltn;
            if (!(c & FUNMAP) && !(c & FMUNMAP)) ++b.pair_map;
        }
        if (!(c & FUNMAP)) ++b.mapped;
        if (!(c & FDUP)) ++b.dup;
    }
    return out;
}

FlagTransform flag_transform(std::uint16_t word) noexcept {
    // FUNMAP and FDUP are always counted; FQCFAIL stays for routing (and
    // gives the fail bucket its word count at position 9).
    constexpr std::uint16_t kKeepSecSupp =
        FUNMAP | FSECONDARY | FDUP | FSUPPLEMENTARY | FQCFAIL;
    constexpr std::uint16_t kPairingBits = FPROPER_PAIR | FMUNMAP | FREAD1 | FREAD2;

    constexpr std::uint16_t all = 0xFFFF;
    const std::uint16_t is_secsupp = (word & (FSECONDARY | FSUPPLEMENTARY)) ? all : 0;
    const std::uint16_t is_sec = (word & FSECONDARY) ? all : 0;
    const std::uint16_t is_paired = (word & FPAIRED) ? all : 0;
    const std::uint16_t is_unmap = (word & FUNMAP) ? all : 0;
    const std::uint16_t is_munmap = (word & FMUNMAP) ? all : 0;

    std::uint16_t dat = word;
    // Secondary/supplementary reads keep only the always-counted bits.
    dat &= static_cast<std::uint16_t>(~(is_secsupp & static_cast<std::uint16_t>(~kKeepSecSupp)));
    // The reference's elif chain: a read with both bits counts as secondary only.
    dat &= static_cast<std::uint16_t>(~(is_sec & FSUPPLEMENTARY));
    // Unpaired reads carry no pairing statistics.
    dat &= static_cast<std::uint16_t>(~(static_cast<std::uint16_t>(~is_paired) & kPairingBits));
    // n_pair_good and n_sgltn both require the read itself to be mapped.
    dat &= static_cast<std::uint16_t>(~(is_unmap & (FPROPER_PAIR | FMUNMAP)));
    // pair_map predicate: paired, primary, both ends mapped.
    dat |= static_cast<std::uint16_t>(is_paired & static_cast<std::uint16_t>(~is_secsupp) &
                                      static_cast<std::uint16_t>(~is_unmap) &
                                      static_cast<std::uint16_t>(~is_munmap) & kPairMapBit);

    const std::uint16_t is_fail = (word & FQCFAIL) ? all : 0;
    return {static_cast<std::uint16_t>(dat & static_cast<std::uint16_t>(~is_fail)),
            static_cast<std::uint16_t>(dat & is_fail)};
}

FlagSummary flagstats_pospopcnt(Word16Span flags, const PospopcntConfig& config) {
    std::vector<std::uint16_t> pass_stream(flags.size());
    std::vector<std::uint16_t> fail_stream(flags.size());
    for (std::size_t i = 0; i < flags.size(); ++i) {
        check_reserved(i, flags[i]);
        const FlagTransform t = flag_transform(flags[i]);
        pass_stream[i] = t.pass;
        fail_stream[i] = t.fail;
    }

    const PositionalCounts pass_counts = pospopcnt(pass_stream, config);
    const PositionalCounts fail_counts = pospopcnt(fail_stream, config);

    FlagSummary out;
    const std::uint64_t fail_total = fail_counts[kPosQcFail];
    out.fail = bucket_from_counts(fail_counts, fail_total);
    out.pass = bucket_from_counts(pass_counts, flags.size() - fail_total);
    return out;
}

std::string format_flag_summary(const FlagSummary& s) {
    std::ostringstream os;
    const auto row = [&os](std::string_view name, std::uint64_t pass, std::uint64_t fail) {
        os << name << std::string(16 - name.size(), ' ') << pass << '\t' << fail << '\n';
    };
    os << "field           QC-pass\tQC-fail\n";
    row("total", s.pass.total, s.fail.total);
    row("secondary", s.pass.secondary, s.fail.secondary);
    row("supplementary", s.pass.supplementary, s.fail.supplementary);
    row("n_pair_good", s.pass.n_pair_good, s.fail.n_pair_good);
    row("n_read1", s.pass.n_read1, s.fail.n_read1);
    row("n_read2", s.pass.n_read2, s.fail.n_read2);
    row("n_sgltn", s.pass.n_sgltn, s.fail.n_sgltn);
    row("pair_map", s.pass.pair_map, s.fail.pair_map);
    row("mapped", s.pass.mapped, s.fail.mapped);
    row("dup", s.pass.dup, s.fail.dup);
    return os.str();
}

}  // namespace pospop
