#pragma once

#include <string>
#include <vector>

#include "ems/ems_problem.hpp"

namespace ems {

// Per-step decisions of one scenario. Storage columns are zero and u_b is 0
// when the storage is disabled. soc is the state at the end of each step.
struct DecisionSchedule {
    std::string scenario_id;
    std::vector<double> p_buy;
    std::vector<double> p_sell;
    std::vector<double> p_ch;
    std::vector<double> p_dis;
    std::vector<double> p_rbe;
    std::vector<double> soc;
    std::vector<double> u_b;
    std::vector<double> u_g;
};

enum class SolveStatus { Optimal, FeasibleGap, Infeasible, Error };
const char* to_string(SolveStatus status);

struct ScenarioOutcome {
    std::string scenario_id;
    SolveStatus status = SolveStatus::Error;
    double cost_eur = 0.0;  // daily cost of this scenario alone
    double gap = 0.0;       // relative MIP gap
    long nodes = 0;
    long lp_iterations = 0;
    double seconds = 0.0;
    std::string message;    // solver message or infeasibility hint
};

struct EmsSolution {
    SolveStatus status = SolveStatus::Error;
    double objective_eur = 0.0; // probability-weighted cost
    double gap = 0.0;           // worst scenario gap
    std::vector<DecisionSchedule> schedules; // empty vectors for scenarios that did not solve
    std::vector<ScenarioOutcome> outcomes;
    double seconds = 0.0;
};

struct SolveOptions {
    double gap_tol = 1e-6;
    double time_limit_s = 60.0; // per scenario (or for the whole model when joint)
    int jobs = 1;
    std::string backend = "bnb";
    // Solve the joint model in one call instead of scenario by scenario.
    // Scenarios share no constraints, so both give the same optimum.
    bool joint = false;
    // On infeasibility, probe which constraint family is responsible.
    bool diagnose = true;
};

// Solves the problem. Scenarios are independent and are solved in parallel
// on `jobs` threads; the result does not depend on `jobs`.
EmsSolution solve(const EmsProblem& problem, const SolveOptions& options = {});

// Daily cost of a schedule for scenario s, recomputed from the prices.
double schedule_cost(const EmsProblem& problem, int s, const DecisionSchedule& schedule);

// Largest violation of each constraint family, computed from the problem
// data and the schedules alone.
struct ResidualReport {
    double ess_charge_gate = 0.0;
    double ess_discharge_gate = 0.0;
    double soc_balance = 0.0;
    double soc_bounds = 0.0;
    double rbe_limit = 0.0;
    double power_balance = 0.0;
    double grid_buy_gate = 0.0;
    double grid_sell_gate = 0.0;
    double variable_bounds = 0.0; // non-negativity and power ratings
    double terminal_soc = 0.0;
    double integrality = 0.0;
    // Largest smaller-of-two flow among simultaneous charge/discharge and
    // simultaneous buy/sell, in kW.
    double ess_simultaneity = 0.0;
    double grid_simultaneity = 0.0;
    // |reported objective - recomputed objective| / max(1, |recomputed|).
    double objective_mismatch = 0.0;

    // Families whose residual exceeds power_tol (kW or kWh) or, for the
    // dimensionless entries, unit_tol.
    std::vector<std::string> failures(double power_tol, double unit_tol = 1e-6) const;
};

ResidualReport validate_solution(const EmsProblem& problem, const EmsSolution& solution);

// Magnitude used to scale residual tolerances: the largest power rating or
// load in the problem, at least 1.
double residual_scale(const EmsProblem& problem);

// "t,p_buy,p_sell,p_ch,p_dis,p_rbe,soc,u_b,u_g" CSV for one scenario.
std::string schedule_csv(const DecisionSchedule& schedule);

} // namespace ems
