#include "ems/ems_problem.hpp"

#include <algorithm>
#include <string>

#include "ems/error.hpp"
#include "ems/ev_demand.hpp"
#include "ems/pv_model.hpp"

namespace ems {

CaseFlags CaseFlags::for_case(int case_number) {
    switch (case_number) {
    case 1: return {false, false};
    case 2: return {true, false};
    case 3: return {false, true};
    case 4: return {true, true};
    }
    throw ConfigError("case must be 1, 2, 3 or 4, got " + std::to_string(case_number));
}

int CaseFlags::case_number() const { return 1 + (ess_enabled ? 1 : 0) + (pv_enabled ? 2 : 0); }

double EmsProblem::pv_at(int s, int t) const {
    return flags.pv_enabled ? pv_power[static_cast<std::size_t>(s)][t] : 0.0;
}

double EmsProblem::net_load(int s, int t) const {
    return scenarios[static_cast<std::size_t>(s)].train_demand[t] + ev_demand[t] - pv_at(s, t);
}

EmsProblem build_problem(const ScenarioSet& scenarios, const StationConfig& config, const Profile& ev_demand,
                         CaseFlags flags) {
    config.validate();
    if (scenarios.empty())
        throw ValidationError("cannot build a problem from an empty scenario set");
    std::string problems;
    for (const auto& v : validate_scenario_set(scenarios, false)) {
        if (v.kind == Violation::Kind::ProbabilitySum || v.kind == Violation::Kind::Horizon)
            continue; // checked by the caller where it matters
        problems += (problems.empty() ? "" : "; ") + v.message;
    }
    if (!problems.empty())
        throw ValidationError(problems);
    if (!ev_demand.grid().compatible_with(scenarios.front().grid()))
        throw ValidationError("EV demand profile is on a different time grid than the scenarios");

    EmsProblem p{scenarios, {}, ev_demand, config.ess, config.grid, config.pv, config.model, flags};
    if (config.pv_penetration) {
        double peak = 0.0;
        for (const auto& s : scenarios)
            peak = std::max(peak, s.train_demand.max());
        p.pv.rated_kw = peak > 0.0 ? size_pv_from_penetration(peak, *config.pv_penetration) : 0.0;
    }
    if (flags.pv_enabled)
        for (const auto& s : scenarios)
            p.pv_power.push_back(pv_profile(s.radiation, p.pv));
    return p;
}

EmsProblem build_problem(const ScenarioSet& scenarios, const StationConfig& config, const FleetSchedule& fleet,
                         CaseFlags flags) {
    if (scenarios.empty())
        throw ValidationError("cannot build a problem from an empty scenario set");
    return build_problem(scenarios, config,
                         ev_demand_profile(fleet, scenarios.front().grid(), config.ev_partial_step), flags);
}

bool grid_gate_reduced(const EmsProblem& problem, int s, int t) {
    const auto& sc = problem.scenarios[static_cast<std::size_t>(s)];
    return problem.model.grid_gate_reduction && sc.buy_price[t] >= sc.sell_price[t];
}

namespace {

std::string tag(const char* name, int s, int t) {
    return std::string(name) + "_s" + std::to_string(s) + "_t" + std::to_string(t);
}

void append_scenario(const EmsProblem& problem, int s, double weight, const Relaxation& relax, MilpModel& out) {
    using lp::Sense;
    auto& m = out.model;
    const auto& sc = problem.scenarios[static_cast<std::size_t>(s)];
    const int steps = problem.steps();
    const double dt = problem.dt_hours();
    const auto& ess = problem.ess;
    const bool with_ess = problem.flags.ess_enabled;
    const double buy_cap = relax.exchange_limits ? lp::kInf : problem.grid.p_buy_max_kw;
    const double sell_cap = relax.exchange_limits ? lp::kInf : problem.grid.p_sell_max_kw;
    const double ch_cap = relax.ess_power_limits ? lp::kInf : ess.p_charge_max_kw;
    const double dis_cap = relax.ess_power_limits ? lp::kInf : ess.p_discharge_max_kw;
    const double soc_lo = relax.soc_bounds ? -lp::kInf : ess.soc_min_kwh();
    const double soc_hi = relax.soc_bounds ? lp::kInf : ess.soc_max_kwh();
    const double discharge_factor = problem.model.discharge_convention == DischargeConvention::Multiply
                                        ? ess.eta_discharge
                                        : 1.0 / ess.eta_discharge;

    out.layout.scenario_index.push_back(s);
    auto& vars = out.layout.vars.emplace_back(static_cast<std::size_t>(steps));
    for (int t = 0; t < steps; ++t) {
        StepVars& v = vars[static_cast<std::size_t>(t)];
        v.p_buy = m.add_variable(tag("p_buy", s, t), 0.0, buy_cap, weight * sc.buy_price[t] * dt);
        v.p_sell = m.add_variable(tag("p_sell", s, t), 0.0, sell_cap, -weight * sc.sell_price[t] * dt);
        v.u_g = m.add_binary(tag("u_g", s, t));
        if (with_ess) {
            v.p_ch = m.add_variable(tag("p_ch", s, t), 0.0, ch_cap);
            v.p_dis = m.add_variable(tag("p_dis", s, t), 0.0, dis_cap);
            v.p_rbe = m.add_variable(tag("p_rbe", s, t), 0.0, sc.rb_available[t]);
            v.soc = m.add_variable(tag("soc", s, t), soc_lo, soc_hi);
            v.u_b = m.add_binary(tag("u_b", s, t));
            m.set_branch_priority(v.u_b, 1);
        }
    }

    for (int t = 0; t < steps; ++t) {
        const StepVars& v = vars[static_cast<std::size_t>(t)];
        if (with_ess) {
            if (!relax.ess_power_limits) {
                m.add_constraint(tag("ess_charge_gate", s, t),
                                 {{v.p_rbe, 1.0}, {v.p_ch, 1.0}, {v.u_b, -ess.p_charge_max_kw}}, Sense::LessEqual, 0.0);
                m.add_constraint(tag("ess_discharge_gate", s, t), {{v.p_dis, 1.0}, {v.u_b, ess.p_discharge_max_kw}},
                                 Sense::LessEqual, ess.p_discharge_max_kw);
            }
            if (problem.model.rbe_gating_cut)
                m.add_constraint(tag("rbe_gate_cut", s, t), {{v.p_rbe, 1.0}, {v.u_b, -sc.rb_available[t]}},
                                 Sense::LessEqual, 0.0);
            // soc_t - (1 - eps) soc_{t-1} - eta_ch dt (rbe + ch) + k dt dis = 0
            std::vector<lp::Term> rec = {{v.soc, 1.0},
                                         {v.p_rbe, -ess.eta_charge * dt},
                                         {v.p_ch, -ess.eta_charge * dt},
                                         {v.p_dis, discharge_factor * dt}};
            double rhs = 0.0;
            if (t == 0)
                rhs = (1.0 - ess.self_discharge) * ess.soc0_kwh();
            else
                rec.push_back({vars[static_cast<std::size_t>(t - 1)].soc, -(1.0 - ess.self_discharge)});
            m.add_constraint(tag("soc_balance", s, t), std::move(rec), Sense::Equal, rhs);
            if (problem.model.soc_headroom_cuts && !relax.soc_bounds) {
                const double keep = 1.0 - ess.self_discharge;
                std::vector<lp::Term> up = {{v.p_rbe, ess.eta_charge * dt}, {v.p_ch, ess.eta_charge * dt}};
                std::vector<lp::Term> down = {{v.p_dis, discharge_factor * dt}};
                double up_rhs = ess.soc_max_kwh();
                double down_rhs = -keep * ess.soc_min_kwh();
                if (t == 0) {
                    up_rhs -= keep * ess.soc0_kwh();
                    down_rhs += keep * ess.soc0_kwh();
                } else {
                    const int prev = vars[static_cast<std::size_t>(t - 1)].soc;
                    up.push_back({prev, keep});
                    down.push_back({prev, -keep});
                }
                m.add_constraint(tag("soc_headroom_cut", s, t), std::move(up), Sense::LessEqual, up_rhs);
                m.add_constraint(tag("soc_floor_cut", s, t), std::move(down), Sense::LessEqual, down_rhs);
            }
        }

        std::vector<lp::Term> balance = {{v.p_buy, 1.0}, {v.p_sell, -1.0}};
        if (with_ess) {
            balance.push_back({v.p_dis, 1.0});
            balance.push_back({v.p_ch, -1.0});
        }
        m.add_constraint(tag("power_balance", s, t), std::move(balance), Sense::Equal, problem.net_load(s, t));

        if (!relax.exchange_limits && !grid_gate_reduced(problem, s, t)) {
            m.add_constraint(tag("grid_buy_gate", s, t), {{v.p_buy, 1.0}, {v.u_g, -problem.grid.p_buy_max_kw}},
                             Sense::LessEqual, 0.0);
            m.add_constraint(tag("grid_sell_gate", s, t), {{v.p_sell, 1.0}, {v.u_g, problem.grid.p_sell_max_kw}},
                             Sense::LessEqual, problem.grid.p_sell_max_kw);
        }
    }
    if (with_ess && problem.model.enforce_terminal_soc && !relax.terminal_soc)
        m.add_constraint(tag("terminal_soc", s, steps - 1), {{vars.back().soc, 1.0}}, Sense::GreaterEqual,
                         ess.soc0_kwh());
}

} // namespace

MilpModel emit_milp(const EmsProblem& problem) {
    MilpModel out;
    for (int s = 0; s < problem.num_scenarios(); ++s)
        append_scenario(problem, s, problem.scenarios[static_cast<std::size_t>(s)].probability, {}, out);
    return out;
}

MilpModel emit_scenario_milp(const EmsProblem& problem, int scenario, double weight, const Relaxation& relax) {
    if (scenario < 0 || scenario >= problem.num_scenarios())
        throw std::out_of_range("scenario index out of range");
    MilpModel out;
    append_scenario(problem, scenario, weight, relax, out);
    return out;
}

} // namespace ems
