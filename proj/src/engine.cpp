#include "ems/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "ems/error.hpp"

namespace ems {

namespace {

constexpr double kResidualTol = 1e-6;

std::string number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write " + path.string());
    out << text;
    if (!out)
        throw DataError("write failed: " + path.string());
}

[[noreturn]] void raise_failure(int case_number, const ScenarioOutcome& o) {
    const std::string what = "case " + std::to_string(case_number) + ", scenario " + o.scenario_id + ": " +
                             to_string(o.status) + (o.message.empty() ? "" : " (" + o.message + ")");
    if (o.status == SolveStatus::Infeasible)
        throw InfeasibleError(what);
    throw SolverError(what);
}

bool solved(SolveStatus st) { return st == SolveStatus::Optimal || st == SolveStatus::FeasibleGap; }

} // namespace

const CaseResult* CaseReport::find(int case_number) const {
    for (const auto& c : cases)
        if (c.case_number == case_number)
            return &c;
    return nullptr;
}

double savings_pct(double base_cost, double case_cost) {
    if (base_cost <= 0.0)
        throw DomainError("savings are only defined for a positive base cost");
    return 100.0 * (base_cost - case_cost) / base_cost;
}

CaseResult run_case(const ScenarioSet& scenarios, const StationConfig& config, const FleetSchedule& fleet,
                    int case_number, const EngineOptions& options) {
    CaseResult r{.case_number = case_number,
                 .problem = build_problem(scenarios, config, fleet, CaseFlags::for_case(case_number)),
                 .solution = {},
                 .residuals = {},
                 .expected_cost_eur = 0.0,
                 .savings_pct = std::nullopt,
                 .complete = true,
                 .failed_scenarios = {}};
    r.solution = solve(r.problem, options.solve);
    auto& sol = r.solution;

    for (const auto& o : sol.outcomes) {
        if (solved(o.status))
            continue;
        if (!options.keep_going)
            raise_failure(case_number, o);
        r.complete = false;
        r.failed_scenarios.push_back(o.scenario_id);
    }
    if (r.complete) {
        r.expected_cost_eur = sol.objective_eur;
        r.residuals = validate_solution(r.problem, sol);
        const auto bad = r.residuals.failures(kResidualTol * residual_scale(r.problem));
        if (!bad.empty()) {
            std::string list;
            for (const auto& f : bad)
                list += (list.empty() ? "" : ", ") + f;
            throw SolverError("case " + std::to_string(case_number) + ": solution fails validation: " + list);
        }
    } else {
        // Expected cost over the scenarios that solved, renormalized.
        double mass = 0.0, cost = 0.0;
        for (std::size_t s = 0; s < sol.outcomes.size(); ++s) {
            if (!solved(sol.outcomes[s].status))
                continue;
            mass += r.problem.scenarios[s].probability;
            cost += r.problem.scenarios[s].probability * sol.outcomes[s].cost_eur;
        }
        r.expected_cost_eur = mass > 0.0 ? cost / mass : 0.0;
    }
    return r;
}

CaseReport run_ablation(const ScenarioSet& scenarios, const StationConfig& config, const FleetSchedule& fleet,
                        const std::vector<int>& cases, const EngineOptions& options) {
    CaseReport report;
    for (int c = 1; c <= 4; ++c) {
        if (std::find(cases.begin(), cases.end(), c) == cases.end())
            continue;
        report.cases.push_back(run_case(scenarios, config, fleet, c, options));
        report.partial = report.partial || !report.cases.back().complete;
    }
    if (report.cases.empty())
        throw ConfigError("no case selected");
    const CaseResult* base = report.find(1);
    if (base && base->expected_cost_eur > 0.0)
        for (auto& c : report.cases)
            c.savings_pct = savings_pct(base->expected_cost_eur, c.expected_cost_eur);
    return report;
}

std::string report_json(const CaseReport& report, const std::string& timestamp) {
    using nlohmann::ordered_json;
    ordered_json root;
    if (!timestamp.empty())
        root["generated"] = timestamp;
    root["partial"] = report.partial;
    ordered_json cases = ordered_json::array();
    for (const auto& c : report.cases) {
        const auto& sol = c.solution;
        ordered_json jc;
        jc["case"] = c.case_number;
        jc["ess"] = c.problem.flags.ess_enabled;
        jc["pv"] = c.problem.flags.pv_enabled;
        jc["pv_rated_kw"] = c.problem.flags.pv_enabled ? c.problem.pv.rated_kw : 0.0;
        jc["expected_cost_eur"] = c.expected_cost_eur;
        jc["savings_pct"] = c.savings_pct ? ordered_json(*c.savings_pct) : ordered_json(nullptr);
        jc["complete"] = c.complete;
        jc["status"] = to_string(sol.status);
        jc["max_gap"] = sol.gap;
        long nodes = 0, iterations = 0;
        for (const auto& o : sol.outcomes) {
            nodes += o.nodes;
            iterations += o.lp_iterations;
        }
        jc["nodes"] = nodes;
        jc["lp_iterations"] = iterations;
        if (!timestamp.empty())
            jc["seconds"] = sol.seconds;
        if (c.complete) {
            const auto& rr = c.residuals;
            jc["max_residual"] = {{"power_balance", rr.power_balance}, {"soc_balance", rr.soc_balance},
                                  {"soc_bounds", rr.soc_bounds},       {"rbe_limit", rr.rbe_limit},
                                  {"integrality", rr.integrality},     {"objective_mismatch", rr.objective_mismatch}};
        }
        ordered_json scen = ordered_json::array();
        for (std::size_t s = 0; s < sol.outcomes.size(); ++s) {
            const auto& o = sol.outcomes[s];
            ordered_json js;
            js["id"] = o.scenario_id;
            js["probability"] = c.problem.scenarios[s].probability;
            js["status"] = to_string(o.status);
            js["cost_eur"] = solved(o.status) ? ordered_json(o.cost_eur) : ordered_json(nullptr);
            js["gap"] = o.gap;
            js["nodes"] = o.nodes;
            if (!o.message.empty() && !solved(o.status))
                js["message"] = o.message;
            scen.push_back(std::move(js));
        }
        jc["scenarios"] = std::move(scen);
        cases.push_back(std::move(jc));
    }
    root["cases"] = std::move(cases);
    return root.dump(2) + "\n";
}

std::string cost_csv(const CaseReport& report) {
    std::string out = "case,scenario,cost_eur\n";
    for (const auto& c : report.cases)
        for (const auto& o : c.solution.outcomes)
            out += std::to_string(c.case_number) + "," + o.scenario_id + "," +
                   (solved(o.status) ? number(o.cost_eur) : std::string()) + "\n";
    return out;
}

std::string series_csv(std::span<const double> values) {
    std::string out = "t,value\n";
    for (std::size_t t = 0; t < values.size(); ++t)
        out += std::to_string(t) + "," + number(values[t]) + "\n";
    return out;
}

void write_report(const std::filesystem::path& dir, const CaseReport& report, const std::string& timestamp) {
    std::filesystem::create_directories(dir);
    write_file(dir / "report.json", report_json(report, timestamp));
    write_file(dir / "costs.csv", cost_csv(report));
    for (const auto& c : report.cases) {
        const auto sub = dir / ("case" + std::to_string(c.case_number));
        std::filesystem::create_directories(sub);
        const auto& sol = c.solution;
        for (std::size_t s = 0; s < sol.schedules.size(); ++s) {
            const auto& sch = sol.schedules[s];
            if (sch.p_buy.empty())
                continue; // scenario did not solve
            const std::string id = c.problem.scenarios[s].id;
            write_file(sub / (id + "_schedule.csv"), schedule_csv(sch));
            if (c.problem.flags.ess_enabled)
                write_file(sub / (id + "_soc.csv"), series_csv(sch.soc));
            if (c.problem.flags.pv_enabled)
                write_file(sub / (id + "_pv.csv"), series_csv(c.problem.pv_power[s].values()));
        }
    }
}

} // namespace ems
