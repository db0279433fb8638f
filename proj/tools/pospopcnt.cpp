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

// Command-line surface over the library: count, verify, bench, flagstats.
// Input files are headerless little-endian 16-bit words; "-" reads standard
// input, which doubles as the hook for external decompressors
// (e.g. `lz4 -d < flags.lz4 | pospopcnt count --input -`).
//
// Exit codes: 0 success, 1 verification/differential failure, 2 usage or
// input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pospop/bench.hpp"
#include "pospop/flagstats.hpp"
#include "pospop/pospop.hpp"
#include "pospop/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Failures that should surface as exit code 2 with a clean message.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint16_t> decode_words(const std::string& bytes, const std::string& origin) {
    if (bytes.size() % 2 != 0)
        throw InputError(origin + ": odd byte length (" + std::to_string(bytes.size()) +
                         " bytes); expected raw little-endian 16-bit words");
    std::vector<std::uint16_t> words(bytes.size() / 2);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto lo = static_cast<unsigned char>(bytes[2 * i]);
        const auto hi = static_cast<unsigned char>(bytes[2 * i + 1]);
        words[i] = static_cast<std::uint16_t>(lo | (hi << 8));
    }
    return words;
}

std::vector<std::uint16_t> read_word_stream(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return decode_words(buffer.str(), "stdin");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + path);
    buffer << in.rdbuf();
    return decode_words(buffer.str(), path);
}

pospop::KernelKind parse_kernel(const std::string& token) {
    const auto kind = pospop::kernel_from_string(token);
    if (!kind)
        throw InputError("unknown kernel '" + token +
                         "' (expected scalar|csa4|csa8|csa16|forest|byteblend|auto)");
    return *kind;
}

std::vector<pospop::KernelKind> parse_kernel_list(const std::string& csv) {
    std::vector<pospop::KernelKind> kinds;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        kinds.push_back(parse_kernel(token));
    }
    if (kinds.empty()) throw InputError("empty kernel list");
    return kinds;
}

// Comma list of word counts; k = x1024 words, m = x1048576 words.
std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        std::size_t multiplier = 1;
        std::string digits = token;
        const char suffix =
            static_cast<char>(std::tolower(static_cast<unsigned char>(token.back())));
        if (suffix == 'k' || suffix == 'm') {
            multiplier = suffix == 'k' ? 1024u : 1048576u;
            digits = token.substr(0, token.size() - 1);
        }
        std::size_t consumed = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(digits, &consumed);
        } catch (const std::exception&) {
            throw InputError("bad size token '" + token + "'");
        }
        if (consumed != digits.size() || digits.empty())
            throw InputError("bad size token '" + token + "'");
        sizes.push_back(static_cast<std::size_t>(value) * multiplier);
    }
    if (sizes.empty()) throw InputError("empty size list");
    return sizes;
}

int run_count(const std::string& input, const std::string& kernel_token, bool as_json) {
    const auto words = read_word_stream(input);
    const pospop::KernelKind kind = parse_kernel(kernel_token);
    pospop::PospopcntConfig config;
    config.kernel = kind;
    const pospop::PositionalCounts counts = pospop::pospopcnt(words, config);

    if (as_json) {
        nlohmann::json out;
        out["kernel"] = std::string(pospop::to_string(kind));
        out["total_words"] = words.size();
        out["counts"] = counts.counts;
        std::cout << out.dump() << '\n';
        return kExitOk;
    }
    std::cout << "words: " << words.size() << '\n';
    std::cout << "kernel: " << pospop::to_string(kind) << '\n';
    for (std::size_t p = 0; p < 16; ++p)
        std::cout << "bit " << (p < 10 ? " " : "") << p << ": " << counts[p] << '\n';
    return kExitOk;
}

int run_verify(std::uint64_t seed, std::size_t max_len, const std::string& kernels_csv) {
    const std::vector<pospop::KernelKind> kernels = parse_kernel_list(kernels_csv);
    const pospop::VerifyReport report = pospop::verify_kernels(seed, max_len, kernels);
    if (report.ok()) {
        std::cout << "all kernels equivalent to the oracle (" << report.cases_run
                  << " cases)\n";
        return kExitOk;
    }
    std::cerr << pospop::format_failure(*report.first_failure);
    return kExitMismatch;
}

int run_bench(const std::string& sizes_csv, const std::string& kernels_csv, std::uint32_t reps,
              std::uint64_t seed, const std::string& csv_path) {
    const auto sizes = parse_sizes(sizes_csv);
    const auto kernels = parse_kernel_list(kernels_csv);
    const auto records = pospop::bench::sweep(kernels, sizes, reps, seed);

    for (const pospop::bench::BenchRecord& rec : records)
        if (!rec.error.empty())
            std::cerr << "warning: " << pospop::to_string(rec.kernel) << " @ " << rec.len_words
                      << " words: " << rec.error << '\n';

    if (csv_path.empty() || csv_path == "-") {
        pospop::bench::write_csv(std::cout, records);
        return kExitOk;
    }
    std::ofstream out(csv_path);
    if (!out) throw InputError("cannot open CSV output file: " + csv_path);
    pospop::bench::write_csv(out, records);
    std::cout << "wrote " << records.size() << " rows to " << csv_path << '\n';
    return kExitOk;
}

int run_flagstats(const std::string& input, const std::string& mode) {
    const auto words = read_word_stream(input);
    try {
        if (mode == "reference") {
            std::cout << format_flag_summary(pospop::flagstats_reference(words));
            return kExitOk;
        }
        if (mode == "pospopcnt") {
            std::cout << format_flag_summary(pospop::flagstats_pospopcnt(words));
            return kExitOk;
        }
        if (mode != "differential")
            throw InputError("unknown mode '" + mode +
                             "' (expected reference|pospopcnt|differential)");

        const pospop::FlagSummary ref = pospop::flagstats_reference(words);
        const pospop::FlagSummary pos = pospop::flagstats_pospopcnt(words);
        if (ref != pos) {
            std::cerr << "differential mismatch\n--- reference ---\n"
                      << format_flag_summary(ref) << "--- pospopcnt ---\n"
                      << format_flag_summary(pos);
            return kExitMismatch;
        }
        std::cout << "reference and pospopcnt summaries agree (" << words.size()
                  << " words)\n"
                  << format_flag_summary(ref);
        return kExitOk;
    } catch (const pospop::InvalidFlagWordError& e) {
        throw InputError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positional population count toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string kernel = "auto";
    std::string kernels = "scalar,csa4,csa8,csa16,forest,byteblend";
    std::string sizes = "4k,256k,8m";
    std::string csv_path;
    std::string mode = "pospopcnt";
    std::uint64_t seed = 1;
    std::uint32_t reps = 3;
    std::size_t max_len = 4096;
    bool as_json = false;

    CLI::App* cmd_count = app.add_subcommand("count", "positional counts of a word-stream file");
    cmd_count->add_option("--input", input, "input file of raw little-endian 16-bit words; - for stdin")
        ->required();
    cmd_count->add_option("--kernel", kernel, "scalar|csa4|csa8|csa16|forest|byteblend|auto");
    cmd_count->add_flag("--json", as_json, "emit a JSON object instead of text");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "compare every kernel against the oracle");
    cmd_verify->add_option("--seed", seed, "PRNG seed for the random streams");
    cmd_verify->add_option("--max-len", max_len, "test every stream length up to this");
    cmd_verify->add_option("--kernels", kernels, "comma list of kernels");

    CLI::App* cmd_bench = app.add_subcommand("bench", "measure kernels across input sizes");
    cmd_bench->add_option("--sizes", sizes, "comma list of word counts (k/m suffixes allowed)");
    cmd_bench->add_option("--kernels", kernels, "comma list of kernels");
    cmd_bench->add_option("--reps", reps, "repetitions per cell (best-of)");
    cmd_bench->add_option("--seed", seed, "PRNG seed for the generated streams");
    cmd_bench->add_option("--csv", csv_path, "CSV output path; stdout when omitted");

    CLI::App* cmd_flagstats =
        app.add_subcommand("flagstats", "SAM FLAG summary statistics of a word-stream file");
    cmd_flagstats->add_option("--input", input, "input file; - for stdin")->required();
    cmd_flagstats->add_option("--mode", mode, "reference|pospopcnt|differential");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_count->parsed()) return run_count(input, kernel, as_json);
        if (cmd_verify->parsed()) return run_verify(seed, max_len, kernels);
        if (cmd_bench->parsed()) return run_bench(sizes, kernels, reps, seed, csv_path);
        if (cmd_flagstats->parsed()) return run_flagstats(input, mode);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pospop::KernelUnavailableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
