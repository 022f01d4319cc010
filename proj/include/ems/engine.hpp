#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ems/ems_solve.hpp"

namespace ems {

struct EngineOptions {
    SolveOptions solve;
    // Keep going after a scenario fails: the expected cost is then taken over
    // the scenarios that solved and the case is marked incomplete.
    bool keep_going = false;
};

struct CaseResult {
    int case_number = 0;
    EmsProblem problem;
    EmsSolution solution;
    ResidualReport residuals;
    double expected_cost_eur = 0.0;
    std::optional<double> savings_pct; // against Case 1, when it is in the report
    bool complete = true;
    std::vector<std::string> failed_scenarios;
};

struct CaseReport {
    std::vector<CaseResult> cases; // ascending case number
    bool partial = false;

    const CaseResult* find(int case_number) const;
};

// Runs one case: EV demand, PV output, problem assembly, solve and residual
// check. Throws InfeasibleError or SolverError (message names the case and
// the scenario) when a scenario fails and keep_going is off.
CaseResult run_case(const ScenarioSet& scenarios, const StationConfig& config, const FleetSchedule& fleet,
                    int case_number, const EngineOptions& options = {});

// Runs the listed cases and fills in savings relative to Case 1:
// 100 (cost_1 - cost_c) / cost_1 when cost_1 > 0.
CaseReport run_ablation(const ScenarioSet& scenarios, const StationConfig& config, const FleetSchedule& fleet,
                        const std::vector<int>& cases = {1, 2, 3, 4}, const EngineOptions& options = {});

double savings_pct(double base_cost, double case_cost);

// Report document. The generation time and the solve times are included only
// when `timestamp` is non-empty; everything else is a function of the inputs.
std::string report_json(const CaseReport& report, const std::string& timestamp = {});
// "case,scenario,cost_eur", one row per case and scenario.
std::string cost_csv(const CaseReport& report);
// "t,value" series.
std::string series_csv(std::span<const double> values);

// Writes report.json, costs.csv and, per case, case<c>/<scenario>_schedule.csv,
// case<c>/<scenario>_soc.csv (storage cases) and case<c>/<scenario>_pv.csv
// (PV cases).
void write_report(const std::filesystem::path& dir, const CaseReport& report, const std::string& timestamp = {});

} // namespace ems
