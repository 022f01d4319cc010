#include "ems/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>

#include "ems/error.hpp"
#include "ems/ingest.hpp"

namespace ems {

namespace {

constexpr int kMinutes = 1440;

// Relative hourly price shape: cheap night, morning and evening peaks and a
// midday dip.
constexpr double kPriceShape[24] = {0.80, 0.74, 0.70, 0.66, 0.62, 0.70, 0.95, 1.25, 1.45, 1.30, 1.05, 0.92,
                                    0.85, 0.82, 0.86, 0.95, 1.10, 1.30, 1.50, 1.65, 1.60, 1.35, 1.10, 0.92};

bool peak_minute(int m) { return (m >= 7 * 60 && m < 9 * 60) || (m >= 17 * 60 && m < 19 * 60); }

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write " + path.string());
    out << text;
}

std::string profile_csv(const Profile& p, const char* unit, double factor) {
    std::string out = std::string("# unit: ") + unit + "\ntimestamp,value\n";
    char buf[96];
    for (int t = 0; t < p.size(); ++t) {
        std::snprintf(buf, sizeof buf, ",%.10g\n", p[t] * factor);
        out += format_timestamp(p.grid().time_at(t)) + buf;
    }
    return out;
}

} // namespace

SyntheticDay synthetic_day(Timestamp date, DayKind kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
    const TimeGrid grid(date, kMinutes, 60);
    const bool summer = kind == DayKind::Summer;

    std::vector<double> demand(kMinutes), rb(kMinutes, 0.0), radiation(kMinutes, 0.0), price(kMinutes);
    for (int m = 0; m < kMinutes; ++m)
        demand[static_cast<std::size_t>(m)] = (m < 5 * 60 || m >= 23 * 60 + 30) ? 120.0 : 260.0;

    // Two train directions, each with its own timetable. A train brakes into
    // the station (RB available) and accelerates out two minutes later.
    for (int direction = 0; direction < 2; ++direction) {
        int m = 5 * 60 + 3 * direction;
        while (m < 24 * 60 - 4) {
            const double accel = uniform(1400.0, 2600.0);
            if (unit(rng) < 0.7) {
                const double brake = uniform(500.0, 1100.0);
                rb[static_cast<std::size_t>(m)] += brake;
                if (unit(rng) < 0.5)
                    rb[static_cast<std::size_t>(m + 1)] += 0.5 * brake;
            }
            demand[static_cast<std::size_t>(m + 2)] += accel;
            demand[static_cast<std::size_t>(m + 3)] += 0.6 * accel;
            m += (peak_minute(m) ? 7 : 14) + static_cast<int>(uniform(-2.0, 2.99));
        }
    }

    // Clear-sky bell times a slowly varying cloud factor.
    const double sunrise = summer ? 5.6 : 7.6;
    const double sunset = summer ? 21.2 : 18.4;
    const double peak = summer ? 950.0 : 470.0;
    const double cloud_floor = summer ? 0.8 : 0.55;
    double cloud = 1.0;
    for (int m = 0; m < kMinutes; ++m) {
        cloud = std::clamp(cloud + uniform(-0.02, 0.02) + 0.01 * (1.0 - cloud), cloud_floor, 1.0);
        const double h = m / 60.0;
        if (h <= sunrise || h >= sunset)
            continue;
        const double x = std::sin(std::numbers::pi * (h - sunrise) / (sunset - sunrise));
        radiation[static_cast<std::size_t>(m)] = peak * std::pow(x, 1.5) * cloud;
    }

    const double level = summer ? 0.085 : 0.14;
    for (int hour = 0; hour < 24; ++hour) {
        const double p = std::max(0.005, level * kPriceShape[hour] * uniform(0.92, 1.08));
        for (int k = 0; k < 60; ++k)
            price[static_cast<std::size_t>(hour * 60 + k)] = p;
    }

    return {Profile(grid, ProfileKind::TrainDemand, std::move(demand)),
            Profile(grid, ProfileKind::RbAvailable, std::move(rb)),
            Profile(grid, ProfileKind::Radiation, std::move(radiation)),
            Profile(grid, ProfileKind::Price, std::move(price))};
}

Scenario synthetic_scenario(const std::string& id, Timestamp date, DayKind kind, std::uint64_t seed,
                            int step_minutes) {
    const SyntheticDay day = synthetic_day(date, kind, seed);
    const TimeGrid grid = TimeGrid::daily(date, step_minutes);
    const auto resample = [&](const Profile& p) { return parse_profile_csv(serialize(p), p.kind(), grid, id); };
    Profile price = resample(day.price);
    return {id, 1.0, resample(day.train_demand), resample(day.rb_available), resample(day.radiation), price, price};
}

ScenarioSet synthetic_scenario_set(int count, std::uint64_t seed, int step_minutes) {
    if (count <= 0)
        throw ConfigError("scenario count must be positive");
    using namespace std::chrono;
    const sys_days first = year{2021} / January / 1;
    ScenarioSet set;
    std::mt19937_64 seeds(seed);
    for (int k = 0; k < count; ++k) {
        char id[32];
        std::snprintf(id, sizeof id, "day%03d", k);
        const Timestamp date{(first + days{k}).time_since_epoch()};
        set.push_back(synthetic_scenario(id, date, k % 2 == 0 ? DayKind::Summer : DayKind::Autumn, seeds(),
                                         step_minutes));
    }
    return with_equal_probabilities(std::move(set));
}

FleetSchedule synthetic_fleet(int buses, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dwell_min(10, 20), trip_min(30, 55);
    FleetSchedule fleet;
    for (int b = 0; b < buses; ++b) {
        Vehicle v;
        v.id = "bus" + std::to_string(b + 1);
        std::int64_t t = (5 * 60 + 30 + 9 * b) * 60LL;
        while (true) {
            const std::int64_t departure = t + dwell_min(rng) * 60LL;
            if (departure > 22 * 3600)
                break;
            v.dwells.push_back({t, departure});
            t = departure + trip_min(rng) * 60LL;
        }
        fleet.vehicles.push_back(std::move(v));
    }
    return fleet;
}

std::string fleet_csv(const FleetSchedule& fleet) {
    std::string out = "vehicle_id,capacity_kwh,charge_kw,consumption_kwh_per_min,arrival,departure\n";
    const auto hhmm = [](std::int64_t s) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld", static_cast<long long>(s / 3600),
                      static_cast<long long>(s / 60 % 60), static_cast<long long>(s % 60));
        return std::string(buf);
    };
    char buf[128];
    for (const auto& v : fleet.vehicles) {
        for (const auto& d : v.dwells) {
            std::snprintf(buf, sizeof buf, ",%g,%g,%g,", v.battery_capacity_kwh, v.nominal_charge_kw,
                          v.route_consumption_kwh_per_min);
            out += v.id + buf + hhmm(d.arrival_s) + "," + hhmm(d.departure_s) + "\n";
        }
    }
    return out;
}

void write_scenario_dir(const std::filesystem::path& dir, const std::string& id, double probability,
                        const SyntheticDay& day) {
    std::filesystem::create_directories(dir);
    write_file(dir / "train_demand.csv", profile_csv(day.train_demand, "kW", 1.0));
    write_file(dir / "rb_available.csv", profile_csv(day.rb_available, "kW", 1.0));
    write_file(dir / "radiation.csv", profile_csv(day.radiation, "W/m2", 1.0));
    write_file(dir / "price.csv", profile_csv(day.price, "EUR/MWh", 1000.0));
    char prob[64];
    std::snprintf(prob, sizeof prob, "%.17g", probability);
    write_file(dir / "scenario.meta", "id=" + id + "\nprobability=" + prob + "\nstart=" +
                                          format_timestamp(day.train_demand.grid().time_at(0)) + "\n");
}

} // namespace ems
