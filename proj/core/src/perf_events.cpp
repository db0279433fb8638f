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
#include "detail/perf_events.hpp"

#ifdef __linux__

#include <linux/perf_event.h>
#include <sys/ioctl.h>
#include <sys/syscall.h>
#include <unistd.h>

#include <cstring>

namespace pospop::detail {
namespace {

int perf_open(std::uint32_t config, int group_fd, std::uint64_t* id_out) {
    perf_event_attr attr;
    std::memset(&attr, 0, sizeof(attr));
    attr.type = PERF_TYPE_HARDWARE;
    attr.size = sizeof(attr);
    attr.config = config;
    attr.disabled = group_fd < 0 ? 1 : 0;
    attr.exclude_kernel = 1;
    attr.exclude_hv = 1;
    attr.read_format = PERF_FORMAT_GROUP | PERF_FORMAT_ID;
    const int fd =
        static_cast<int>(syscall(__NR_perf_event_open, &attr, 0, -1, group_fd, 0));
    if (fd >= 0 && id_out != nullptr) ioctl(fd, PERF_EVENT_IOC_ID, id_out);
    return fd;
}

}  // namespace

PerfCounters::PerfCounters() {
    leader_fd_ = perf_open(PERF_COUNT_HW_CPU_CYCLES, -1, &cycles_id_);
    if (leader_fd_ < 0) return;
    sibling_fd_ = perf_open(PERF_COUNT_HW_INSTRUCTIONS, leader_fd_, &instructions_id_);
    if (sibling_fd_ < 0) {
        close(leader_fd_);
        leader_fd_ = -1;
    }
}

PerfCounters::~PerfCounters() {
    if (sibling_fd_ >= 0) close(sibling_fd_);
    if (leader_fd_ >= 0) close(leader_fd_);
}

void PerfCounters::start() noexcept {
    if (leader_fd_ < 0) return;
    ioctl(leader_fd_, PERF_EVENT_IOC_RESET, PERF_IOC_FLAG_GROUP);
    ioctl(leader_fd_, PERF_EVENT_IOC_ENABLE, PERF_IOC_FLAG_GROUP);
}

std::optional<PerfCounters::Reading> PerfCounters::stop() noexcept {
    if (leader_fd_ < 0) return std::nullopt;
    ioctl(leader_fd_, PERF_EVENT_IOC_DISABLE, PERF_IOC_FLAG_GROUP);

    struct {
        std::uint64_t nr;
        struct {
            std::uint64_t value;
            std::uint64_t id;
        } values[2];
    } data{};
    if (read(leader_fd_, &data, sizeof(data)) < 0 || data.nr != 2) return std::nullopt;

    Reading out;
    for (const auto& v : data.values) {
        if (v.id == cycles_id_) out.cycles = v.value;
        if (v.id == instructions_id_) out.instructions = v.value;
    }
    return out;
}

}  // namespace pospop::detail

#else  // !__linux__

namespace pospop::detail {

PerfCounters::PerfCounters() = default;
PerfCounters::~PerfCounters() = default;
void PerfCounters::start() noexcept {}
std::optional<PerfCounters::Reading> PerfCounters::stop() noexcept { return std::nullopt; }

}  // namespace pospop::detail

#endif
