#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace ems {

using Timestamp = std::chrono::sys_seconds;

// Parses "YYYY-MM-DD[T ]HH:MM[:SS][Z|+HH:MM|-HH:MM]" into UTC seconds.
// Fixed offsets only; no zone database lookups.
Timestamp parse_timestamp(std::string_view text);

// UTC rendering, "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(Timestamp ts);

// Parses "HH:MM" or "HH:MM:SS" (00:00 .. 24:00) into seconds after midnight.
std::int64_t parse_time_of_day(std::string_view text);

// Uniform discretization of a horizon. The step length is kept as an integer
// number of seconds so that grids compare exactly; dt_hours() is derived.
class TimeGrid {
public:
    TimeGrid(Timestamp start, int steps, std::int64_t step_seconds);

    // A 24 h grid with the given step in minutes (must divide 1440).
    static TimeGrid daily(Timestamp start, int step_minutes);

    Timestamp start() const { return start_; }
    int steps() const { return steps_; }
    std::int64_t step_seconds() const { return step_seconds_; }
    double dt_hours() const { return static_cast<double>(step_seconds_) / 3600.0; }
    double horizon_hours() const { return steps_ * dt_hours(); }
    bool covers_day() const { return steps_ * step_seconds_ == 86400; }

    Timestamp time_at(int step) const { return start_ + std::chrono::seconds(step * step_seconds_); }

    // Same resolution and length. Scenarios are different calendar days, so
    // the start instant is not part of compatibility.
    bool compatible_with(const TimeGrid& other) const {
        return steps_ == other.steps_ && step_seconds_ == other.step_seconds_;
    }

    bool operator==(const TimeGrid&) const = default;

private:
    Timestamp start_;
    int steps_;
    std::int64_t step_seconds_;
};

} // namespace ems
