#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ems/engine.hpp"
#include "ems/error.hpp"
#include "ems/ingest.hpp"
#include "ems/instance.hpp"
#include "ems/lp/backend.hpp"
#include "ems/oracle/brute_force.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kConfig = 2, kData = 3, kInfeasible = 4, kSolver = 5 };

struct DataArgs {
    std::string config;
    std::string scenarios;
    std::string fleet;
    int dt_min = 0; // 0: take it from the config
};

struct RunArgs {
    DataArgs data;
    std::string cases = "all";
    double gap = 1e-6;
    double time_limit_s = 60.0;
    int jobs = 0; // 0: all hardware threads
    std::string out = "ems_out";
    bool keep_going = false;
    bool no_timestamp = false;
};

struct OracleArgs {
    std::string instance;
    double gap = 1e-6;
    double time_limit_s = 60.0;
};

void add_data_options(CLI::App& cmd, DataArgs& a) {
    cmd.add_option("--config", a.config, "Station configuration (JSON)")->required();
    cmd.add_option("--scenarios", a.scenarios, "Directory with one subdirectory per scenario")->required();
    cmd.add_option("--fleet", a.fleet, "Bus fleet CSV, one row per dwell")->required();
    cmd.add_option("--dt-min", a.dt_min, "Step length in minutes (overrides the config)")->check(CLI::PositiveNumber);
}

std::string backend_name() {
    const char* env = std::getenv("EMS_SOLVER");
    const std::string name = env ? env : "";
    if (name.empty())
        return "bnb";
    for (const auto& known : ems::lp::backend_names())
        if (known == name)
            return name;
    std::string list;
    for (const auto& known : ems::lp::backend_names())
        list += (list.empty() ? "" : ", ") + known;
    throw ems::ConfigError("EMS_SOLVER='" + name + "' is not a known solver backend (available: " + list + ")");
}

struct Inputs {
    ems::StationConfig config;
    ems::ScenarioSet scenarios;
    ems::FleetSchedule fleet;
};

// Loads and validates everything; returns the problems found instead of
// throwing so that `validate` can list them all.
Inputs load_inputs(const DataArgs& a, std::vector<std::string>& problems) {
    Inputs in;
    in.config = ems::load_config(a.config);
    if (a.dt_min > 0)
        in.config.dt_minutes = a.dt_min;
    in.config.validate();
    if (!fs::exists(a.fleet))
        throw ems::DataError("fleet file " + a.fleet + " does not exist");
    in.fleet = ems::ingest_fleet(a.fleet);
    for (auto& v : ems::fleet_violations(in.fleet))
        problems.push_back("fleet: " + v);
    in.scenarios = ems::load_scenarios(a.scenarios, in.config.dt_minutes);
    for (const auto& v : ems::validate_scenario_set(in.scenarios))
        problems.push_back("scenarios: " + v.message);
    return in;
}

Inputs load_valid_inputs(const DataArgs& a) {
    std::vector<std::string> problems;
    Inputs in = load_inputs(a, problems);
    if (!problems.empty()) {
        std::string all;
        for (const auto& p : problems)
            all += "\n  " + p;
        throw ems::ValidationError("input validation failed:" + all);
    }
    return in;
}

std::vector<int> parse_cases(const std::string& text) {
    if (text == "all")
        return {1, 2, 3, 4};
    if (text.size() == 1 && text[0] >= '1' && text[0] <= '4')
        return {text[0] - '0'};
    throw ems::ConfigError("--case must be 1, 2, 3, 4 or all, got '" + text + "'");
}

std::string now_utc() {
    return ems::format_timestamp(std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
}

int cmd_run(const RunArgs& a) {
    const auto cases = parse_cases(a.cases);
    ems::EngineOptions options;
    options.solve.gap_tol = a.gap;
    options.solve.time_limit_s = a.time_limit_s;
    options.solve.jobs = a.jobs > 0 ? a.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    options.solve.backend = backend_name();
    options.keep_going = a.keep_going;
    const Inputs in = load_valid_inputs(a.data);

    const auto report = ems::run_ablation(in.scenarios, in.config, in.fleet, cases, options);
    ems::write_report(a.out, report, a.no_timestamp ? std::string() : now_utc());

    std::printf("%-6s %-5s %-5s %16s %12s  %s\n", "case", "ess", "pv", "expected_eur", "savings_%", "status");
    bool any_infeasible = false;
    for (const auto& c : report.cases) {
        char savings[32] = "-";
        if (c.savings_pct)
            std::snprintf(savings, sizeof savings, "%.2f", *c.savings_pct);
        std::printf("%-6d %-5s %-5s %16.2f %12s  %s%s\n", c.case_number, c.problem.flags.ess_enabled ? "yes" : "no",
                    c.problem.flags.pv_enabled ? "yes" : "no", c.expected_cost_eur, savings,
                    ems::to_string(c.solution.status), c.complete ? "" : " (incomplete)");
        for (const auto& o : c.solution.outcomes)
            if (o.status == ems::SolveStatus::Infeasible)
                any_infeasible = true;
    }
    std::printf("report written to %s\n", a.out.c_str());
    if (report.partial) {
        std::fprintf(stderr, "error: some scenarios did not solve; expected costs cover the rest only\n");
        return any_infeasible ? kInfeasible : kSolver;
    }
    return kOk;
}

int cmd_validate(const DataArgs& a) {
    std::vector<std::string> problems;
    const Inputs in = load_inputs(a, problems);
    if (problems.empty()) {
        std::printf("ok: %zu scenarios, %zu vehicles, %d-minute steps\n", in.scenarios.size(),
                    in.fleet.vehicles.size(), in.config.dt_minutes);
        return kOk;
    }
    for (const auto& p : problems)
        std::printf("violation: %s\n", p.c_str());
    return kData;
}

int cmd_oracle(const OracleArgs& a) {
    const ems::EmsProblem problem = ems::load_instance(a.instance);
    if (problem.steps() > ems::oracle::kBruteForceMaxSteps) {
        std::fprintf(stderr, "error: the oracle handles at most %d steps, the instance has %d\n",
                     ems::oracle::kBruteForceMaxSteps, problem.steps());
        return kConfig;
    }
    const auto oracle = ems::oracle::brute_force(problem);
    ems::SolveOptions options;
    options.gap_tol = a.gap;
    options.time_limit_s = a.time_limit_s;
    options.backend = backend_name();
    const auto milp = ems::solve(problem, options);

    const bool milp_feasible =
        milp.status == ems::SolveStatus::Optimal || milp.status == ems::SolveStatus::FeasibleGap;
    if (oracle.feasible)
        std::printf("oracle: %.9f EUR (%ld of %ld assignments feasible)\n", oracle.objective_eur,
                    oracle.feasible_assignments, oracle.assignments);
    else
        std::printf("oracle: infeasible (%ld assignments)\n", oracle.assignments);
    if (milp_feasible)
        std::printf("milp:   %.9f EUR (%s)\n", milp.objective_eur, ems::to_string(milp.status));
    else
        std::printf("milp:   %s\n", ems::to_string(milp.status));

    if (!oracle.feasible && milp.status == ems::SolveStatus::Infeasible) {
        std::printf("agree: both infeasible\n");
        return kOk;
    }
    if (oracle.feasible && milp_feasible) {
        const double diff = std::abs(milp.objective_eur - oracle.objective_eur);
        std::printf("difference: %.3e EUR\n", diff);
        return diff <= 1e-6 * std::max(1.0, std::abs(oracle.objective_eur)) ? kOk : kFailure;
    }
    std::printf("disagree: feasibility differs\n");
    return kFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scenario-based energy management optimizer for a railway station"};
    app.require_subcommand(1);

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Solve one case or all four and write the report");
    add_data_options(*run_cmd, run.data);
    run_cmd->add_option("--case", run.cases, "1, 2, 3, 4 or all")->capture_default_str();
    run_cmd->add_option("--gap", run.gap, "Relative MIP gap tolerance")->capture_default_str();
    run_cmd->add_option("--time-limit-s", run.time_limit_s, "Time limit per scenario solve")->capture_default_str();
    run_cmd->add_option("--jobs", run.jobs, "Parallel scenario solves (0: all hardware threads)")
        ->capture_default_str();
    run_cmd->add_option("--out", run.out, "Output directory")->capture_default_str();
    run_cmd->add_flag("--keep-going", run.keep_going, "Continue past failed scenarios");
    run_cmd->add_flag("--no-timestamp", run.no_timestamp, "Leave run-dependent fields out of the report");

    DataArgs validate;
    auto* validate_cmd = app.add_subcommand("validate", "Check the input data without solving");
    add_data_options(*validate_cmd, validate);

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Compare the MILP with exhaustive enumeration on a tiny instance");
    oracle_cmd->add_option("instance", oracle.instance, "Instance JSON with at most 4 steps")->required();
    oracle_cmd->add_option("--gap", oracle.gap, "Relative MIP gap tolerance")->capture_default_str();
    oracle_cmd->add_option("--time-limit-s", oracle.time_limit_s, "Time limit")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (*run_cmd)
            return cmd_run(run);
        if (*validate_cmd)
            return cmd_validate(validate);
        return cmd_oracle(oracle);
    } catch (const ems::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfig;
    } catch (const ems::DataError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return kData;
    } catch (const ems::InfeasibleError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return kInfeasible;
    } catch (const ems::SolverError& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return kSolver;
    } catch (const ems::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kFailure;
    }
}
