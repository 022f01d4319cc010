#include "ems/time_grid.hpp"

#include <charconv>
#include <cstdio>

#include "ems/error.hpp"

namespace ems {

namespace {

int read_int(std::string_view text, std::size_t pos, std::size_t len, std::string_view whole) {
    if (pos + len > text.size())
        throw FormatError("truncated timestamp '" + std::string(whole) + "'");
    int value = 0;
    auto first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, value);
    if (ec != std::errc{} || ptr != first + len)
        throw FormatError("bad digits in timestamp '" + std::string(whole) + "'");
    return value;
}

void expect(std::string_view text, std::size_t pos, char c, std::string_view whole) {
    if (pos >= text.size() || text[pos] != c)
        throw FormatError("malformed timestamp '" + std::string(whole) + "'");
}

} // namespace

Timestamp parse_timestamp(std::string_view text) {
    using namespace std::chrono;
    while (!text.empty() && (text.back() == ' ' || text.back() == '\r'))
        text.remove_suffix(1);
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);

    const int y = read_int(text, 0, 4, text);
    expect(text, 4, '-', text);
    const int mo = read_int(text, 5, 2, text);
    expect(text, 7, '-', text);
    const int d = read_int(text, 8, 2, text);
    if (text.size() < 11 || (text[10] != 'T' && text[10] != ' '))
        throw FormatError("timestamp without time part '" + std::string(text) + "'");
    const int hh = read_int(text, 11, 2, text);
    expect(text, 13, ':', text);
    const int mm = read_int(text, 14, 2, text);
    std::size_t pos = 16;
    int ss = 0;
    if (pos < text.size() && text[pos] == ':') {
        ss = read_int(text, pos + 1, 2, text);
        pos += 3;
    }
    if (pos < text.size() && text[pos] == '.') {
        // Fractional seconds are accepted but must be zero.
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            if (text[pos] != '0')
                throw FormatError("sub-second timestamp '" + std::string(text) + "'");
            ++pos;
        }
    }
    int offset_seconds = 0;
    if (pos < text.size()) {
        const char tz = text[pos];
        if (tz == 'Z' && pos + 1 == text.size()) {
            pos += 1;
        } else if (tz == '+' || tz == '-') {
            const int oh = read_int(text, pos + 1, 2, text);
            std::size_t mpos = pos + 3;
            if (mpos < text.size() && text[mpos] == ':')
                ++mpos;
            const int om = read_int(text, mpos, 2, text);
            if (mpos + 2 != text.size())
                throw FormatError("trailing characters in timestamp '" + std::string(text) + "'");
            offset_seconds = (tz == '+' ? 1 : -1) * (oh * 3600 + om * 60);
            pos = text.size();
        } else {
            throw FormatError("unrecognized timezone suffix in '" + std::string(text) + "'");
        }
    }
    if (pos != text.size())
        throw FormatError("trailing characters in timestamp '" + std::string(text) + "'");

    const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || hh > 24 || mm > 59 || ss > 60 || (hh == 24 && (mm != 0 || ss != 0)))
        throw FormatError("out-of-range field in timestamp '" + std::string(text) + "'");
    const sys_days days{ymd};
    return Timestamp{days.time_since_epoch()} + hours{hh} + minutes{mm} + seconds{ss} -
           seconds{offset_seconds};
}

std::string format_timestamp(Timestamp ts) {
    using namespace std::chrono;
    const auto days = floor<std::chrono::days>(ts);
    const year_month_day ymd{days};
    const auto secs = (ts - days).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<long long>(secs / 3600), static_cast<long long>((secs / 60) % 60),
                  static_cast<long long>(secs % 60));
    return buf;
}

std::int64_t parse_time_of_day(std::string_view text) {
    while (!text.empty() && (text.back() == ' ' || text.back() == '\r'))
        text.remove_suffix(1);
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    if (text.size() != 5 && text.size() != 8)
        throw FormatError("time of day must be HH:MM or HH:MM:SS, got '" + std::string(text) + "'");
    const int hh = read_int(text, 0, 2, text);
    expect(text, 2, ':', text);
    const int mm = read_int(text, 3, 2, text);
    int ss = 0;
    if (text.size() == 8) {
        expect(text, 5, ':', text);
        ss = read_int(text, 6, 2, text);
    }
    if (mm > 59 || ss > 59 || hh > 24 || (hh == 24 && (mm != 0 || ss != 0)))
        throw FormatError("time of day out of range: '" + std::string(text) + "'");
    return hh * 3600LL + mm * 60LL + ss;
}

TimeGrid::TimeGrid(Timestamp start, int steps, std::int64_t step_seconds)
    : start_(start), steps_(steps), step_seconds_(step_seconds) {
    if (steps <= 0)
        throw ConfigError("time grid needs a positive number of steps");
    if (step_seconds <= 0)
        throw ConfigError("time grid needs a positive step length");
}

TimeGrid TimeGrid::daily(Timestamp start, int step_minutes) {
    if (step_minutes <= 0 || 1440 % step_minutes != 0)
        throw ConfigError("step of " + std::to_string(step_minutes) + " min does not divide a day");
    return TimeGrid(start, 1440 / step_minutes, step_minutes * 60LL);
}

} // namespace ems
