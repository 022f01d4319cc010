#include "ems/ems_solve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

#include "ems/lp/backend.hpp"

namespace ems {

const char* to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::FeasibleGap: return "feasible-gap";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Error: return "error";
    }
    return "?";
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

DecisionSchedule extract(const EmsProblem& problem, int s, const std::vector<StepVars>& vars,
                         const std::vector<double>& x) {
    const auto n = static_cast<std::size_t>(problem.steps());
    DecisionSchedule out;
    out.scenario_id = problem.scenarios[static_cast<std::size_t>(s)].id;
    for (auto* v : {&out.p_buy, &out.p_sell, &out.p_ch, &out.p_dis, &out.p_rbe, &out.soc, &out.u_b, &out.u_g})
        v->assign(n, 0.0);
    const auto get = [&](int col) { return col < 0 ? 0.0 : x[static_cast<std::size_t>(col)]; };
    for (std::size_t t = 0; t < n; ++t) {
        const StepVars& v = vars[t];
        out.p_buy[t] = get(v.p_buy);
        out.p_sell[t] = get(v.p_sell);
        out.p_ch[t] = get(v.p_ch);
        out.p_dis[t] = get(v.p_dis);
        out.p_rbe[t] = get(v.p_rbe);
        out.soc[t] = get(v.soc);
        out.u_b[t] = std::round(get(v.u_b));
        out.u_g[t] = std::round(get(v.u_g));
        if (grid_gate_reduced(problem, s, static_cast<int>(t))) {
            const double net = std::min(out.p_buy[t], out.p_sell[t]);
            out.p_buy[t] -= net;
            out.p_sell[t] -= net;
            if (out.p_buy[t] > 0.0 || out.p_sell[t] > 0.0)
                out.u_g[t] = out.p_buy[t] > 0.0 ? 1.0 : 0.0;
        }
    }
    return out;
}

SolveStatus map_status(lp::MipStatus status) {
    switch (status) {
    case lp::MipStatus::Optimal: return SolveStatus::Optimal;
    case lp::MipStatus::FeasibleGap: return SolveStatus::FeasibleGap;
    case lp::MipStatus::Infeasible: return SolveStatus::Infeasible;
    case lp::MipStatus::Unbounded:
    case lp::MipStatus::Error: return SolveStatus::Error;
    }
    return SolveStatus::Error;
}

std::string diagnose_infeasibility(const EmsProblem& problem, int s, const SolveOptions& options) {
    struct Probe {
        const char* family;
        Relaxation relax;
        bool applicable;
    };
    const bool ess = problem.flags.ess_enabled;
    const Probe probes[] = {
        {"grid exchange limits", {.exchange_limits = true}, true},
        {"storage SoC bounds", {.soc_bounds = true}, ess},
        {"storage power limits", {.ess_power_limits = true}, ess},
        {"terminal SoC requirement", {.terminal_soc = true}, ess && problem.model.enforce_terminal_soc},
    };
    auto backend = lp::make_backend(options.backend);
    lp::MipOptions mip;
    mip.gap_tol = 1e-2;
    mip.time_limit_s = std::min(options.time_limit_s, 10.0);
    std::string found;
    for (const auto& probe : probes) {
        if (!probe.applicable)
            continue;
        const auto r = backend->solve(emit_scenario_milp(problem, s, 1.0, probe.relax).model, mip);
        if (r.status != lp::MipStatus::Infeasible)
            found += (found.empty() ? "" : ", ") + std::string(probe.family);
    }
    if (found.empty())
        return "infeasible: no single constraint family explains it; the power balance cannot be met";
    return "infeasible: binding constraint family: " + found;
}

// Turns a fractional node point into an integer one by netting simultaneous
// flows: buy against sell and storage charge against discharge, both of
// which leave the power balance unchanged. The SoC trajectory is recomputed
// from the netted flows and the direction binaries are read off the flows
// that remain. Fails when RB charging overlaps with discharging, which only
// branching can resolve.
std::function<bool(std::vector<double>&)> netting_repair(const EmsProblem& problem, const std::vector<StepVars>& vars) {
    return [&problem, &vars](std::vector<double>& x) {
        const auto& ess = problem.ess;
        const double dt = problem.dt_hours();
        const double keep = 1.0 - ess.self_discharge;
        const double k_dis = problem.model.discharge_convention == DischargeConvention::Multiply
                                 ? ess.eta_discharge
                                 : 1.0 / ess.eta_discharge;
        const auto at = [&x](int col) -> double& { return x[static_cast<std::size_t>(col)]; };
        double soc = ess.soc0_kwh();
        for (const StepVars& v : vars) {
            const double net = std::min(at(v.p_buy), at(v.p_sell));
            at(v.p_buy) -= net;
            at(v.p_sell) -= net;
            at(v.u_g) = at(v.p_buy) > 0.0 ? 1.0 : (at(v.p_sell) > 0.0 ? 0.0 : std::round(at(v.u_g)));
            if (v.u_b < 0)
                continue;
            const double cycle = std::min(at(v.p_ch), at(v.p_dis));
            at(v.p_ch) -= cycle;
            at(v.p_dis) -= cycle;
            const bool charging = at(v.p_ch) + at(v.p_rbe) > 0.0;
            const bool discharging = at(v.p_dis) > 0.0;
            if (charging && discharging)
                return false;
            at(v.u_b) = charging ? 1.0 : (discharging ? 0.0 : std::round(at(v.u_b)));
            soc = keep * soc + ess.eta_charge * (at(v.p_ch) + at(v.p_rbe)) * dt - k_dis * at(v.p_dis) * dt;
            at(v.soc) = soc;
        }
        return true;
    };
}

ScenarioOutcome solve_one(const EmsProblem& problem, int s, const SolveOptions& options, DecisionSchedule& schedule) {
    ScenarioOutcome out;
    out.scenario_id = problem.scenarios[static_cast<std::size_t>(s)].id;
    const auto start = std::chrono::steady_clock::now();
    try {
        const MilpModel milp = emit_scenario_milp(problem, s);
        auto backend = lp::make_backend(options.backend);
        lp::MipOptions mip;
        mip.gap_tol = options.gap_tol;
        mip.time_limit_s = options.time_limit_s;
        mip.repair = netting_repair(problem, milp.layout.vars.front());
        const auto r = backend->solve(milp.model, mip);
        out.status = map_status(r.status);
        out.nodes = r.nodes;
        out.lp_iterations = r.lp_iterations;
        out.message = r.message;
        if (out.status == SolveStatus::Optimal || out.status == SolveStatus::FeasibleGap) {
            out.cost_eur = r.objective;
            out.gap = r.gap;
            schedule = extract(problem, s, milp.layout.vars.front(), r.x);
        } else if (out.status == SolveStatus::Infeasible && options.diagnose) {
            out.message = diagnose_infeasibility(problem, s, options);
        } else if (r.status == lp::MipStatus::Unbounded) {
            out.message = "unbounded objective";
        }
    } catch (const std::exception& e) {
        out.status = SolveStatus::Error;
        out.message = e.what();
    }
    out.seconds = seconds_since(start);
    return out;
}

SolveStatus aggregate(const std::vector<ScenarioOutcome>& outcomes) {
    SolveStatus worst = SolveStatus::Optimal;
    const auto rank = [](SolveStatus st) {
        switch (st) {
        case SolveStatus::Optimal: return 0;
        case SolveStatus::FeasibleGap: return 1;
        case SolveStatus::Infeasible: return 2;
        case SolveStatus::Error: return 3;
        }
        return 3;
    };
    for (const auto& o : outcomes)
        if (rank(o.status) > rank(worst))
            worst = o.status;
    return worst;
}

EmsSolution solve_joint(const EmsProblem& problem, const SolveOptions& options) {
    EmsSolution sol;
    const auto start = std::chrono::steady_clock::now();
    const MilpModel milp = emit_milp(problem);
    auto backend = lp::make_backend(options.backend);
    lp::MipOptions mip;
    mip.gap_tol = options.gap_tol;
    mip.time_limit_s = options.time_limit_s;
    const auto r = backend->solve(milp.model, mip);
    const SolveStatus status = map_status(r.status);
    const bool has_x = status == SolveStatus::Optimal || status == SolveStatus::FeasibleGap;
    for (int s = 0; s < problem.num_scenarios(); ++s) {
        ScenarioOutcome o;
        o.scenario_id = problem.scenarios[static_cast<std::size_t>(s)].id;
        o.status = status;
        o.message = r.message;
        if (has_x) {
            sol.schedules.push_back(extract(problem, s, milp.layout.vars[static_cast<std::size_t>(s)], r.x));
            o.cost_eur = schedule_cost(problem, s, sol.schedules.back());
            o.gap = r.gap;
        }
        sol.outcomes.push_back(std::move(o));
    }
    sol.status = status;
    if (has_x) {
        sol.objective_eur = r.objective;
        sol.gap = r.gap;
    }
    if (status == SolveStatus::Infeasible && options.diagnose) {
        for (int s = 0; s < problem.num_scenarios(); ++s) {
            DecisionSchedule unused;
            auto o = solve_one(problem, s, options, unused);
            sol.outcomes[static_cast<std::size_t>(s)] = std::move(o);
        }
    }
    sol.seconds = seconds_since(start);
    return sol;
}

} // namespace

EmsSolution solve(const EmsProblem& problem, const SolveOptions& options) {
    lp::make_backend(options.backend); // reject unknown names before spawning workers
    if (options.joint)
        return solve_joint(problem, options);

    const auto start = std::chrono::steady_clock::now();
    const auto n = static_cast<std::size_t>(problem.num_scenarios());
    std::vector<ScenarioOutcome> outcomes(n);
    std::vector<DecisionSchedule> schedules(n);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t s = next++; s < n; s = next++)
            outcomes[s] = solve_one(problem, static_cast<int>(s), options, schedules[s]);
    };
    const int jobs = std::clamp(options.jobs, 1, static_cast<int>(std::max<std::size_t>(n, 1)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    EmsSolution sol;
    sol.status = aggregate(outcomes);
    if (sol.status == SolveStatus::Optimal || sol.status == SolveStatus::FeasibleGap) {
        for (std::size_t s = 0; s < n; ++s) {
            sol.objective_eur += problem.scenarios[s].probability * outcomes[s].cost_eur;
            sol.gap = std::max(sol.gap, outcomes[s].gap);
        }
    }
    sol.schedules = std::move(schedules);
    sol.outcomes = std::move(outcomes);
    sol.seconds = seconds_since(start);
    return sol;
}

double schedule_cost(const EmsProblem& problem, int s, const DecisionSchedule& schedule) {
    const auto& sc = problem.scenarios[static_cast<std::size_t>(s)];
    const double dt = problem.dt_hours();
    double cost = 0.0;
    for (int t = 0; t < problem.steps(); ++t) {
        const auto i = static_cast<std::size_t>(t);
        cost += (sc.buy_price[t] * schedule.p_buy[i] - sc.sell_price[t] * schedule.p_sell[i]) * dt;
    }
    return cost;
}

double residual_scale(const EmsProblem& problem) {
    double scale = std::max({1.0, problem.grid.p_buy_max_kw, problem.grid.p_sell_max_kw});
    if (problem.flags.ess_enabled)
        scale = std::max({scale, problem.ess.p_charge_max_kw, problem.ess.p_discharge_max_kw,
                          problem.ess.capacity_kwh});
    for (int s = 0; s < problem.num_scenarios(); ++s)
        for (int t = 0; t < problem.steps(); ++t)
            scale = std::max(scale, std::abs(problem.net_load(s, t)));
    return scale;
}

ResidualReport validate_solution(const EmsProblem& problem, const EmsSolution& solution) {
    ResidualReport r;
    const double dt = problem.dt_hours();
    const auto& ess = problem.ess;
    const double k_dis =
        problem.model.discharge_convention == DischargeConvention::Multiply ? ess.eta_discharge : 1.0 / ess.eta_discharge;
    const auto upd = [](double& slot, double v) { slot = std::max(slot, v); };
    const auto over = [](double value, double limit) { return std::max(0.0, value - limit); };
    const auto bin_gap = [](double u) { return std::min(std::abs(u), std::abs(u - 1.0)); };

    double recomputed = 0.0;
    const int steps = problem.steps();
    for (std::size_t k = 0; k < solution.schedules.size(); ++k) {
        const auto& sch = solution.schedules[k];
        if (sch.p_buy.empty())
            continue; // scenario without a solution
        const int s = static_cast<int>(k);
        const auto& sc = problem.scenarios[k];
        recomputed += sc.probability * schedule_cost(problem, s, sch);
        double prev = ess.soc0_kwh();
        for (int t = 0; t < steps; ++t) {
            const auto i = static_cast<std::size_t>(t);
            const double g = sch.p_buy[i], sl = sch.p_sell[i], c = sch.p_ch[i], d = sch.p_dis[i], rb = sch.p_rbe[i];
            const double soc = sch.soc[i], ub = sch.u_b[i], ug = sch.u_g[i];
            for (double v : {g, sl, c, d, rb})
                upd(r.variable_bounds, -v);
            upd(r.variable_bounds, over(g, problem.grid.p_buy_max_kw));
            upd(r.variable_bounds, over(sl, problem.grid.p_sell_max_kw));
            upd(r.integrality, std::max(bin_gap(ub), bin_gap(ug)));
            upd(r.grid_buy_gate, over(g, problem.grid.p_buy_max_kw * ug));
            upd(r.grid_sell_gate, over(sl, problem.grid.p_sell_max_kw * (1.0 - ug)));
            upd(r.grid_simultaneity, std::min(g, sl));
            upd(r.power_balance, std::abs(g - sl + d - c - problem.net_load(s, t)));
            if (problem.flags.ess_enabled) {
                upd(r.variable_bounds, over(c, ess.p_charge_max_kw));
                upd(r.variable_bounds, over(d, ess.p_discharge_max_kw));
                upd(r.ess_charge_gate, over(c + rb, ess.p_charge_max_kw * ub));
                upd(r.ess_discharge_gate, over(d, ess.p_discharge_max_kw * (1.0 - ub)));
                upd(r.rbe_limit, over(rb, sc.rb_available[t]));
                const double expected =
                    (1.0 - ess.self_discharge) * prev + ess.eta_charge * (rb + c) * dt - k_dis * d * dt;
                upd(r.soc_balance, std::abs(soc - expected));
                upd(r.soc_bounds, std::max(over(soc, ess.soc_max_kwh()), over(ess.soc_min_kwh(), soc)));
                upd(r.ess_simultaneity, std::min(c + rb, d));
                prev = soc;
            } else {
                upd(r.variable_bounds, std::max({std::abs(c), std::abs(d), std::abs(rb)}));
            }
        }
        if (problem.flags.ess_enabled && problem.model.enforce_terminal_soc)
            upd(r.terminal_soc, over(ess.soc0_kwh(), prev));
    }
    r.objective_mismatch = std::abs(solution.objective_eur - recomputed) / std::max(1.0, std::abs(recomputed));
    return r;
}

std::vector<std::string> ResidualReport::failures(double power_tol, double unit_tol) const {
    std::vector<std::string> out;
    const std::pair<const char*, double> power[] = {
        {"ess_charge_gate", ess_charge_gate},   {"ess_discharge_gate", ess_discharge_gate},
        {"soc_balance", soc_balance},           {"soc_bounds", soc_bounds},
        {"rbe_limit", rbe_limit},               {"power_balance", power_balance},
        {"grid_buy_gate", grid_buy_gate},       {"grid_sell_gate", grid_sell_gate},
        {"variable_bounds", variable_bounds},   {"terminal_soc", terminal_soc},
        {"ess_simultaneity", ess_simultaneity}, {"grid_simultaneity", grid_simultaneity},
    };
    for (const auto& [name, value] : power)
        if (!(value <= power_tol))
            out.push_back(std::string(name) + "=" + std::to_string(value));
    if (!(integrality <= unit_tol))
        out.push_back("integrality=" + std::to_string(integrality));
    if (!(objective_mismatch <= unit_tol))
        out.push_back("objective_mismatch=" + std::to_string(objective_mismatch));
    return out;
}

std::string schedule_csv(const DecisionSchedule& s) {
    std::string out = "t,p_buy,p_sell,p_ch,p_dis,p_rbe,soc,u_b,u_g\n";
    char buf[512];
    for (std::size_t t = 0; t < s.p_buy.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%zu,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%d,%d\n", t, s.p_buy[t], s.p_sell[t],
                      s.p_ch[t], s.p_dis[t], s.p_rbe[t], s.soc[t], static_cast<int>(s.u_b[t]),
                      static_cast<int>(s.u_g[t]));
        out += buf;
    }
    return out;
}

} // namespace ems
