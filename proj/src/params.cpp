#include "ems/params.hpp"

#include <cmath>
#include <set>

#include "ems/error.hpp"

namespace ems {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok)
        throw ConfigError(message);
}

bool finite(double v) { return std::isfinite(v); }

} // namespace

void EssParams::validate() const {
    require(finite(capacity_kwh) && capacity_kwh > 0.0, "ess.capacity_kwh must be positive");
    require(finite(p_charge_max_kw) && p_charge_max_kw >= 0.0, "ess.p_charge_max_kw must be >= 0");
    require(finite(p_discharge_max_kw) && p_discharge_max_kw >= 0.0, "ess.p_discharge_max_kw must be >= 0");
    require(eta_charge > 0.0 && eta_charge <= 1.0, "ess.eta_charge must be in (0, 1]");
    require(eta_discharge > 0.0 && eta_discharge <= 1.0, "ess.eta_discharge must be in (0, 1]");
    require(self_discharge >= 0.0 && self_discharge < 1.0, "ess.self_discharge must be in [0, 1)");
    require(0.0 <= soc_min_fraction && soc_min_fraction <= soc0_fraction && soc0_fraction <= soc_max_fraction &&
                soc_max_fraction <= 1.0,
            "ess fractions must satisfy 0 <= soc_min <= soc0 <= soc_max <= 1");
}

void GridParams::validate() const {
    require(finite(p_buy_max_kw) && p_buy_max_kw > 0.0, "grid.p_buy_max_kw must be positive and finite");
    require(finite(p_sell_max_kw) && p_sell_max_kw >= 0.0, "grid.p_sell_max_kw must be >= 0 and finite");
}

void PvParams::validate() const {
    require(finite(rated_kw) && rated_kw >= 0.0, "pv.rated_kw must be >= 0");
    require(finite(r_c_wm2) && finite(r_std_wm2) && r_c_wm2 > 0.0 && r_c_wm2 < r_std_wm2,
            "pv thresholds must satisfy 0 < r_c < r_std");
}

void StationConfig::validate() const {
    ess.validate();
    grid.validate();
    pv.validate();
    if (pv_penetration)
        require(*pv_penetration >= 0.0 && *pv_penetration <= 1.0, "pv.penetration must be in [0, 1]");
    require(dt_minutes > 0 && 1440 % dt_minutes == 0, "dt_minutes must divide 1440");
}

std::vector<std::string> fleet_violations(const FleetSchedule& fleet) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& v : fleet.vehicles) {
        const std::string who = "vehicle '" + v.id + "'";
        if (v.id.empty())
            out.push_back("vehicle with empty id");
        if (!seen.insert(v.id).second)
            out.push_back(who + " defined more than once");
        if (!(v.battery_capacity_kwh > 0.0) || !finite(v.battery_capacity_kwh))
            out.push_back(who + ": capacity must be positive");
        if (!(v.nominal_charge_kw >= 0.0) || !finite(v.nominal_charge_kw))
            out.push_back(who + ": charge power must be >= 0");
        if (!(v.route_consumption_kwh_per_min >= 0.0) || !finite(v.route_consumption_kwh_per_min))
            out.push_back(who + ": route consumption must be >= 0");
        if (!(v.eta_charge > 0.0 && v.eta_charge <= 1.0) || !(v.eta_discharge > 0.0 && v.eta_discharge <= 1.0))
            out.push_back(who + ": efficiencies must be in (0, 1]");
        if (v.initial_soc_kwh && !(*v.initial_soc_kwh >= 0.0 && *v.initial_soc_kwh <= v.battery_capacity_kwh))
            out.push_back(who + ": initial SoC outside [0, capacity]");
        for (std::size_t k = 0; k < v.dwells.size(); ++k) {
            const auto& d = v.dwells[k];
            if (d.arrival_s >= d.departure_s)
                out.push_back(who + ": dwell " + std::to_string(k) + " does not arrive before it departs");
            if (d.arrival_s < 0 || d.departure_s > 86400)
                out.push_back(who + ": dwell " + std::to_string(k) + " lies outside the day");
            if (k > 0 && d.arrival_s < v.dwells[k - 1].departure_s)
                out.push_back(who + ": dwell " + std::to_string(k) + " overlaps or precedes dwell " +
                              std::to_string(k - 1));
        }
    }
    return out;
}

} // namespace ems
