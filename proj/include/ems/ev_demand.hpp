#pragma once

#include <span>
#include <string>
#include <vector>

#include "ems/params.hpp"
#include "ems/profile.hpp"

namespace ems {

// Where a bus spends a grid step. OffDuty covers the time before its first
// arrival and after its last departure: no charging, no route consumption.
enum class Location { AtStation, EnRoute, OffDuty };

struct VehicleState {
    double soc_kwh = 0.0;
    Location location = Location::OffDuty;
};

// Half-open step interval [first, last) on a grid.
struct StepRange {
    int first = 0;
    int last = 0;
};

// Dwells rounded outward to grid boundaries (arrival floored, departure
// ceiled), clipped to the horizon and merged where rounding makes them touch.
std::vector<StepRange> dwell_steps(const Vehicle& vehicle, const TimeGrid& grid);

Location location_at(std::span<const StepRange> dwells, int step);

// Advances one step of length dt_hours spent at state.location. Charging adds
// eta_charge * P_nom * dt clamped at capacity; driving removes
// eta_discharge * consumption * minutes floored at zero.
VehicleState step_vehicle(const VehicleState& state, const Vehicle& vehicle, double dt_hours);

// Station draw (kW) of a plugged-in vehicle over one step.
double charging_demand_kw(const VehicleState& state, const Vehicle& vehicle, double dt_hours,
                          PartialStepDemand policy);

// Indices into fleet.vehicles of buses at the station with SoC strictly below
// capacity. `states` must already carry the locations for this step.
std::vector<std::size_t> plugged_in_set(const FleetSchedule& fleet, std::span<const VehicleState> states);

struct FleetSimulation {
    Profile demand;                                // kW per step
    std::vector<std::vector<double>> soc_kwh;      // [vehicle][step], SoC at the start of the step
    std::vector<std::vector<std::size_t>> plugged; // [step] -> vehicle indices
};

FleetSimulation simulate_fleet(const FleetSchedule& fleet, const TimeGrid& grid,
                               PartialStepDemand policy = PartialStepDemand::Prorated);

// Aggregate EV charging demand at the station.
Profile ev_demand_profile(const FleetSchedule& fleet, const TimeGrid& grid,
                          PartialStepDemand policy = PartialStepDemand::Prorated);

} // namespace ems
