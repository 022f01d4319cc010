#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ems {

// Stationary storage at the substation. Fractions are relative to capacity.
struct EssParams {
    double capacity_kwh = 1000.0;
    double p_charge_max_kw = 1000.0;
    double p_discharge_max_kw = 1000.0;
    double eta_charge = 0.95;
    double eta_discharge = 0.95;
    double self_discharge = 0.0; // fraction of the stored energy lost per step
    double soc0_fraction = 0.5;
    double soc_min_fraction = 0.1;
    double soc_max_fraction = 1.0;

    double soc0_kwh() const { return soc0_fraction * capacity_kwh; }
    double soc_min_kwh() const { return soc_min_fraction * capacity_kwh; }
    double soc_max_kwh() const { return soc_max_fraction * capacity_kwh; }

    void validate() const;
};

struct GridParams {
    double p_buy_max_kw = 5000.0;
    double p_sell_max_kw = 5000.0;

    void validate() const;
};

struct PvParams {
    double rated_kw = 0.0;
    double r_c_wm2 = 150.0;
    double r_std_wm2 = 1000.0;

    void validate() const;
};

// One stay at the station, in seconds after the start of the day.
struct Dwell {
    std::int64_t arrival_s = 0;
    std::int64_t departure_s = 0;
};

struct Vehicle {
    std::string id;
    double battery_capacity_kwh = 280.0;
    double nominal_charge_kw = 300.0;
    double route_consumption_kwh_per_min = 0.87;
    double eta_charge = 1.0;
    double eta_discharge = 1.0;
    std::optional<double> initial_soc_kwh; // full battery when absent
    std::vector<Dwell> dwells;             // time ordered

    double start_soc_kwh() const { return initial_soc_kwh.value_or(battery_capacity_kwh); }
};

struct FleetSchedule {
    std::vector<Vehicle> vehicles;
};

// Returns human-readable violations; empty means the fleet is valid.
std::vector<std::string> fleet_violations(const FleetSchedule& fleet);

enum class DischargeConvention {
    Multiply, // SoC -= eta_dis * P_dis * dt
    Divide,   // SoC -= P_dis * dt / eta_dis
};

// How the step in which an EV battery fills up is billed.
enum class PartialStepDemand {
    Prorated, // only the energy that fits: remaining / (eta * dt)
    Nominal,  // full nominal power for the whole step
};

struct ModelOptions {
    DischargeConvention discharge_convention = DischargeConvention::Multiply;
    bool enforce_terminal_soc = false;
    // Adds P_rbe <= P_rbe_avail * u_B. Valid for every integer point, so the
    // optimum is unchanged; it only tightens the relaxation.
    bool rbe_gating_cut = true;
    // Adds eta_ch dt (P_rbe + P_ch) <= SoC_max - (1 - eps) SoC_{t-1} and
    // k dt P_dis <= (1 - eps)(SoC_{t-1} - SoC_min). Both hold in either
    // storage mode, so they are valid for every integer point.
    bool soc_headroom_cuts = true;
    // At steps where the buy price is at least the sell price, importing and
    // exporting at once never beats the netted flows, so the grid direction
    // binary is left out of the rows and set from the netted flows when the
    // schedule is extracted. The optimum is unchanged.
    bool grid_gate_reduction = true;
};

struct StationConfig {
    EssParams ess;
    GridParams grid;
    PvParams pv;
    // When set, pv.rated_kw is derived from the peak train demand.
    std::optional<double> pv_penetration;
    PartialStepDemand ev_partial_step = PartialStepDemand::Prorated;
    ModelOptions model;
    int dt_minutes = 15;

    void validate() const;
};

} // namespace ems
