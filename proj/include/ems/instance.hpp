#pragma once

#include <filesystem>
#include <string>

#include "ems/ems_problem.hpp"

namespace ems {

// Self-contained single-scenario problem in one JSON document, used for the
// small instances checked against the enumeration oracle:
//
//   {
//     "case": 4,
//     "step_minutes": 60,
//     "station": { ...same schema as the station config... },
//     "train_demand_kw": [...], "rb_available_kw": [...],
//     "radiation_wm2": [...], "ev_demand_kw": [...],
//     "buy_price_eur_per_kwh": [...], "sell_price_eur_per_kwh": [...]
//   }
//
// All series must have the same length. radiation_wm2, rb_available_kw and
// ev_demand_kw default to zeros and the sell price defaults to the buy price.
// Throws DataError for an unreadable file, ConfigError for structural
// problems and ValidationError for bad values.
EmsProblem parse_instance(const std::string& json_text, const std::string& source = "<memory>");
EmsProblem load_instance(const std::filesystem::path& path);

} // namespace ems
