#pragma once

#include <string>
#include <vector>

#include "ems/profile.hpp"

namespace ems {

// One day's exogenous data with its probability weight.
struct Scenario {
    std::string id;
    double probability = 1.0;
    Profile train_demand; // kW
    Profile rb_available; // kW
    Profile radiation;    // W/m2
    Profile buy_price;    // EUR/kWh
    Profile sell_price;   // EUR/kWh

    const TimeGrid& grid() const { return train_demand.grid(); }
};

using ScenarioSet = std::vector<Scenario>;

struct Violation {
    enum class Kind { Empty, ProbabilityRange, ProbabilitySum, Grid, Horizon, ProfileKind, DuplicateId };
    Kind kind;
    std::string message;
};

// Checks probabilities, shared grids and per-profile kinds. Violations are
// returned as data; an empty vector means the set is usable.
std::vector<Violation> validate_scenario_set(const ScenarioSet& set, bool require_daily = true);

// Scenario set with every probability set to 1/S.
ScenarioSet with_equal_probabilities(ScenarioSet set);

} // namespace ems
