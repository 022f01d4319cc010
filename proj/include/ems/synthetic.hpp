#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "ems/params.hpp"
#include "ems/scenario.hpp"

namespace ems {

// Qualitative day types: long, high-irradiance days and short days with
// roughly half the peak irradiance.
enum class DayKind { Summer, Autumn };

// One synthetic day at 1-minute resolution: train demand with acceleration
// peaks, regenerative-braking bursts at train arrivals, clear-sky radiation
// with cloud dips and hourly day-ahead style prices (EUR/kWh).
struct SyntheticDay {
    Profile train_demand;
    Profile rb_available;
    Profile radiation;
    Profile price;
};

SyntheticDay synthetic_day(Timestamp date, DayKind kind, std::uint64_t seed);

// A synthetic day resampled onto a step_minutes grid through the same path as
// CSV ingestion. Buy and sell prices are equal.
Scenario synthetic_scenario(const std::string& id, Timestamp date, DayKind kind, std::uint64_t seed,
                            int step_minutes = 15);

// `count` days alternating between the two kinds, consecutive dates from
// 2021-01-01, equal probabilities.
ScenarioSet synthetic_scenario_set(int count, std::uint64_t seed, int step_minutes = 15);

// Electric buses shuttling between the station and their routes from early
// morning to late evening with 280 kWh / 300 kW / 0.87 kWh/min defaults.
FleetSchedule synthetic_fleet(int buses, std::uint64_t seed);

// Fleet CSV in the format read by ingest_fleet.
std::string fleet_csv(const FleetSchedule& fleet);

// Writes one scenario directory (the four profile CSVs plus scenario.meta).
void write_scenario_dir(const std::filesystem::path& dir, const std::string& id, double probability,
                        const SyntheticDay& day);

} // namespace ems
