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

#include <cstdint>
#include <optional>

namespace pospop::detail {

// Narrow adapter over Linux perf events for the cycle and instruction
// counters. Hosts without the syscall, or containers that deny it, simply
// report unavailable; nothing aborts.
class PerfCounters {
  public:
    struct Reading {
        std::uint64_t cycles = 0;
        std::uint64_t instructions = 0;
    };

    PerfCounters();
    ~PerfCounters();
    PerfCounters(const PerfCounters&) = delete;
    PerfCounters& operator=(const PerfCounters&) = delete;

    bool available() const noexcept { return leader_fd_ >= 0; }

    void start() noexcept;
    std::optional<Reading> stop() noexcept;

  private:
    int leader_fd_ = -1;   // cycles; instructions ride in the same group
    int sibling_fd_ = -1;  // instructions
    std::uint64_t cycles_id_ = 0;
    std::uint64_t instructions_id_ = 0;
};

}  // namespace pospop::detail
