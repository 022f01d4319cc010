#include "ems/ev_demand.hpp"

#include <algorithm>

#include "ems/error.hpp"

namespace ems {

std::vector<StepRange> dwell_steps(const Vehicle& vehicle, const TimeGrid& grid) {
    const std::int64_t step = grid.step_seconds();
    std::vector<StepRange> out;
    for (const auto& d : vehicle.dwells) {
        const auto first = static_cast<int>(std::clamp<std::int64_t>(d.arrival_s / step, 0, grid.steps()));
        const auto last =
            static_cast<int>(std::clamp<std::int64_t>((d.departure_s + step - 1) / step, 0, grid.steps()));
        if (first >= last)
            continue;
        if (!out.empty() && first <= out.back().last)
            out.back().last = std::max(out.back().last, last);
        else
            out.push_back({first, last});
    }
    return out;
}

Location location_at(std::span<const StepRange> dwells, int step) {
    if (dwells.empty() || step < dwells.front().first || step >= dwells.back().last)
        return Location::OffDuty;
    for (const auto& r : dwells)
        if (r.first <= step && step < r.last)
            return Location::AtStation;
    return Location::EnRoute;
}

VehicleState step_vehicle(const VehicleState& state, const Vehicle& vehicle, double dt_hours) {
    VehicleState next = state;
    switch (state.location) {
    case Location::AtStation:
        if (state.soc_kwh < vehicle.battery_capacity_kwh)
            next.soc_kwh = std::min(state.soc_kwh + vehicle.eta_charge * vehicle.nominal_charge_kw * dt_hours,
                                    vehicle.battery_capacity_kwh);
        break;
    case Location::EnRoute:
        next.soc_kwh = std::max(
            state.soc_kwh - vehicle.eta_discharge * vehicle.route_consumption_kwh_per_min * (dt_hours * 60.0), 0.0);
        break;
    case Location::OffDuty:
        break;
    }
    return next;
}

double charging_demand_kw(const VehicleState& state, const Vehicle& vehicle, double dt_hours,
                          PartialStepDemand policy) {
    if (state.location != Location::AtStation || !(state.soc_kwh < vehicle.battery_capacity_kwh))
        return 0.0;
    if (policy == PartialStepDemand::Nominal)
        return vehicle.nominal_charge_kw;
    const double fill_kw = (vehicle.battery_capacity_kwh - state.soc_kwh) / (vehicle.eta_charge * dt_hours);
    return std::min(vehicle.nominal_charge_kw, fill_kw);
}

std::vector<std::size_t> plugged_in_set(const FleetSchedule& fleet, std::span<const VehicleState> states) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < fleet.vehicles.size(); ++v)
        if (states[v].location == Location::AtStation && states[v].soc_kwh < fleet.vehicles[v].battery_capacity_kwh)
            out.push_back(v);
    return out;
}

FleetSimulation simulate_fleet(const FleetSchedule& fleet, const TimeGrid& grid, PartialStepDemand policy) {
    if (const auto problems = fleet_violations(fleet); !problems.empty())
        throw ValidationError("invalid fleet: " + problems.front());

    const std::size_t n = fleet.vehicles.size();
    const int steps = grid.steps();
    const double dt = grid.dt_hours();

    std::vector<std::vector<StepRange>> ranges(n);
    std::vector<VehicleState> states(n);
    for (std::size_t v = 0; v < n; ++v) {
        ranges[v] = dwell_steps(fleet.vehicles[v], grid);
        states[v].soc_kwh = fleet.vehicles[v].start_soc_kwh();
    }

    std::vector<double> demand(static_cast<std::size_t>(steps), 0.0);
    std::vector<std::vector<double>> soc(n, std::vector<double>(static_cast<std::size_t>(steps)));
    std::vector<std::vector<std::size_t>> plugged(static_cast<std::size_t>(steps));
    for (int t = 0; t < steps; ++t) {
        const auto ts = static_cast<std::size_t>(t);
        for (std::size_t v = 0; v < n; ++v) {
            states[v].location = location_at(ranges[v], t);
            soc[v][ts] = states[v].soc_kwh;
        }
        plugged[ts] = plugged_in_set(fleet, states);
        double total = 0.0;
        for (std::size_t v : plugged[ts])
            total += charging_demand_kw(states[v], fleet.vehicles[v], dt, policy);
        demand[ts] = total;
        for (std::size_t v = 0; v < n; ++v)
            states[v] = step_vehicle(states[v], fleet.vehicles[v], dt);
    }
    return {Profile(grid, ProfileKind::Power, std::move(demand)), std::move(soc), std::move(plugged)};
}

Profile ev_demand_profile(const FleetSchedule& fleet, const TimeGrid& grid, PartialStepDemand policy) {
    return simulate_fleet(fleet, grid, policy).demand;
}

} // namespace ems
