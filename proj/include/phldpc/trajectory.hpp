// Copyright 2026 The phldpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "phldpc/code.hpp"

namespace phldpc {

enum class LatchKind : uint8_t { variable, check };

struct Event {
    double t = 0.0;
    LatchKind kind = LatchKind::variable;
    uint32_t index = 0;
    Bit new_bit = 0;

    bool operator==(const Event &) const = default;
};

enum class Outcome : uint8_t {
    success,
    timeout,
    event_cap,
    /// Total rate reached zero before success; the process can never move again.
    absorbed,
};

inline std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::success:
            return "success";
        case Outcome::timeout:
            return "timeout";
        case Outcome::event_cap:
            return "event_cap";
        case Outcome::absorbed:
            return "absorbed";
    }
    return "?";
}

struct TimelinePoint {
    double t = 0.0;
    uint32_t errors = 0;

    bool operator==(const TimelinePoint &) const = default;
};

/// Result of one jump-process run. `errors_timeline` starts with the initial
/// count at t = 0 and gains a point at every event that changes the count.
struct TrajectoryRecord {
    std::vector<Event> events;
    std::vector<TimelinePoint> errors_timeline;
    Outcome outcome = Outcome::timeout;
    /// First-passage time to zero errors; set only on success.
    std::optional<double> t_decode;
    /// Clock value at termination.
    double t_end = 0.0;
    /// Number of applied events, counted even when `events` is not recorded.
    uint64_t n_events = 0;

    bool success() const { return outcome == Outcome::success; }
    uint32_t initial_errors() const { return errors_timeline.empty() ? 0 : errors_timeline.front().errors; }
};

/// One line per event: `t kind index new_bit`, kind being `v` or `c`.
inline void write_event_log(std::ostream &out, const TrajectoryRecord &record) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (const auto &e : record.events) {
        out << e.t << ' ' << (e.kind == LatchKind::variable ? 'v' : 'c') << ' ' << e.index << ' '
            << static_cast<int>(e.new_bit) << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

/// CSV `t,errors`.
inline void write_timeline_csv(std::ostream &out, const TrajectoryRecord &record) {
    const auto precision = out.precision();
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "t,errors\n";
    for (const auto &p : record.errors_timeline) {
        out << p.t << ',' << p.errors << '\n';
    }
    out.precision(precision);
}

}  // namespace phldpc
