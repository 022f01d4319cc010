#pragma once

#include <filesystem>
#include <string>

#include "ems/params.hpp"
#include "ems/profile.hpp"
#include "ems/scenario.hpp"

namespace ems {

// Reads a "timestamp,value" CSV and resamples it onto `grid`.
//
// An optional "# unit: <tag>" line may precede the header; without it values
// are taken to be in the internal unit of `kind`. The source resolution must
// be an integer multiple or divisor of the grid step. Power-like series are
// averaged when downsampled and repeated when upsampled; prices are sampled
// at the grid stamps. Rows outside the grid horizon are ignored.
//
// Throws FormatError (syntax, unit tag, misaligned stamps), GapError (missing
// stamps, the message lists the ranges) and ValidationError (negative values
// in non-negative kinds).
Profile ingest_profile(const std::filesystem::path& path, ProfileKind kind, const TimeGrid& grid);

// Same as ingest_profile but on in-memory CSV text; `source` names it in errors.
Profile parse_profile_csv(const std::string& text, ProfileKind kind, const TimeGrid& grid,
                          const std::string& source = "<memory>");

// Timestamp of the first data row.
Timestamp first_timestamp(const std::filesystem::path& path);

// Fleet CSV, one row per dwell:
//   vehicle_id,capacity_kwh,charge_kw,consumption_kwh_per_min,arrival,departure
// plus optional eta_charge, eta_discharge, initial_soc_kwh columns. Arrival and
// departure are HH:MM[:SS] after the start of the day. Structural validity is
// checked separately by fleet_violations().
FleetSchedule ingest_fleet(const std::filesystem::path& path);
FleetSchedule parse_fleet_csv(const std::string& text, const std::string& source = "<memory>");

// JSON station configuration. Unknown keys are rejected.
StationConfig load_config(const std::filesystem::path& path);
StationConfig parse_config(const std::string& json_text, const std::string& source = "<memory>");

// One subdirectory per scenario with train_demand.csv, rb_available.csv,
// radiation.csv, price.csv (optionally sell_price.csv) and scenario.meta
// (key=value lines: id, probability, start). Subdirectories are read in
// lexicographic order. Missing probabilities share the remaining mass equally.
ScenarioSet load_scenarios(const std::filesystem::path& dir, int dt_minutes);

std::string read_text_file(const std::filesystem::path& path);

} // namespace ems
