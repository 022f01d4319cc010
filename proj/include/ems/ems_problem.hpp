#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ems/lp/model.hpp"
#include "ems/params.hpp"
#include "ems/scenario.hpp"

namespace ems {

// Which optional resources take part in a run.
//   Case 1: neither, Case 2: storage (with regenerative braking) only,
//   Case 3: PV only, Case 4: both.
struct CaseFlags {
    bool ess_enabled = true;
    bool pv_enabled = true;

    static CaseFlags for_case(int case_number);
    int case_number() const;
    bool operator==(const CaseFlags&) const = default;
};

// Solver-ready description of one run: every scenario's exogenous series on a
// common grid, the station parameters and the case toggles. Disabled
// components are represented by empty pv_power and no storage variables.
struct EmsProblem {
    ScenarioSet scenarios;
    std::vector<Profile> pv_power; // one per scenario when PV is enabled, else empty
    Profile ev_demand;
    EssParams ess;
    GridParams grid;
    PvParams pv;
    ModelOptions model;
    CaseFlags flags;

    int steps() const { return ev_demand.size(); }
    double dt_hours() const { return ev_demand.grid().dt_hours(); }
    int num_scenarios() const { return static_cast<int>(scenarios.size()); }
    // PV output of scenario s at step t (0 when PV is disabled).
    double pv_at(int s, int t) const;
    // Train + EV demand minus PV: what grid exchange and storage must cover.
    double net_load(int s, int t) const;
};

// Assembles an EmsProblem. EV demand is computed once from the fleet and
// shared by all scenarios. When config.pv_penetration is set, the PV rating
// is that fraction of the largest train demand over the scenario set.
// Throws ValidationError for an empty set or mismatched grids.
EmsProblem build_problem(const ScenarioSet& scenarios, const StationConfig& config, const FleetSchedule& fleet,
                         CaseFlags flags);
// Variant with a precomputed EV demand profile.
EmsProblem build_problem(const ScenarioSet& scenarios, const StationConfig& config, const Profile& ev_demand,
                         CaseFlags flags);

// Column indices of one scenario's decision variables; -1 where absent.
struct StepVars {
    int p_buy = -1;
    int p_sell = -1;
    int p_ch = -1;
    int p_dis = -1;
    int p_rbe = -1;
    int soc = -1;
    int u_b = -1;
    int u_g = -1;
};

struct MilpLayout {
    std::vector<int> scenario_index;         // scenarios present in the model
    std::vector<std::vector<StepVars>> vars; // [k][t], k indexes scenario_index
};

// Families of constraints that can be lifted when looking for the cause of
// an infeasibility.
struct Relaxation {
    bool exchange_limits = false;
    bool soc_bounds = false;
    bool ess_power_limits = false;
    bool terminal_soc = false;
};

struct MilpModel {
    lp::Model model;
    MilpLayout layout;
};

// True when the grid direction binary of step t is left out of the rows
// (see ModelOptions::grid_gate_reduction).
bool grid_gate_reduced(const EmsProblem& problem, int scenario, int t);

// The full model: objective sum_s sum_t pi_s (C_G P_G - C_S P_S) dt over all
// scenarios, which share no constraints.
MilpModel emit_milp(const EmsProblem& problem);

// One scenario alone with objective weight `weight` (1 gives the scenario's
// own daily cost).
MilpModel emit_scenario_milp(const EmsProblem& problem, int scenario, double weight = 1.0,
                             const Relaxation& relax = {});

} // namespace ems
