// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed below.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ems/engine.hpp"
#include "ems/ev_demand.hpp"
#include "ems/ingest.hpp"
#include "ems/oracle/brute_force.hpp"
#include "ems/pv_model.hpp"
#include "ems/synthetic.hpp"
#include "support.hpp"

using namespace ems;
using Clock = std::chrono::steady_clock;

namespace {

// Oracle equivalence
constexpr int kOracleInstances = 200;
constexpr int kOracleMinFeasible = 50;
constexpr double kOracleRelTol = 1e-6;
constexpr double kOracleSeconds = 10.0;
// Feasibility
constexpr double kBalanceTol = 1e-6;      // times max(1, peak demand kW)
constexpr double kSocTol = 1e-9;          // times capacity
constexpr double kBinaryTol = 1e-9;       // distance of a binary from {0, 1}
constexpr double kComplementTol = 1e-6;   // smaller of two opposing flows, times max(1, peak demand kW)
constexpr double kRbeTol = 1e-6;          // times max(1, peak demand kW)
// Monotonicity
constexpr int kMonotoneInstances = 30;
constexpr double kMonotoneRelTol = 1e-9;
constexpr double kTightGap = 1e-10;
// PV
constexpr double kPvContinuityTol = 1e-12; // times rated power
// EV
constexpr int kFleets = 40;
// Scale
constexpr int kScaleScenarios = 200;
constexpr int kScaleStepMinutes = 15;
constexpr double kScaleGap = 1e-6;
constexpr double kScaleSeconds = 120.0;
// Expectation linearity
constexpr int kLinearityScenarios = 10;
constexpr double kLinearityRelTol = 1e-9;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

// Residual checks computed from the problem data and the schedules.
struct Feasibility {
    long instances = 0;
    long schedules = 0;
    double balance = 0.0; // normalized by the tolerance scale, as are the others
    double soc = 0.0;
    double binary = 0.0;
    double complement = 0.0;
    double rbe = 0.0;

    void record(const EmsProblem& p, const EmsSolution& sol) {
        ++instances;
        const int T = p.steps();
        for (int s = 0; s < p.num_scenarios(); ++s) {
            const auto& sch = sol.schedules[static_cast<std::size_t>(s)];
            if (sch.p_buy.empty())
                continue;
            ++schedules;
            const auto& sc = p.scenarios[static_cast<std::size_t>(s)];
            double peak = 0.0;
            for (int t = 0; t < T; ++t)
                peak = std::max(peak, sc.train_demand[t] + p.ev_demand[t]);
            const double scale = std::max(1.0, peak);
            for (int t = 0; t < T; ++t) {
                const auto i = static_cast<std::size_t>(t);
                const double pv = p.flags.pv_enabled ? p.pv_power[static_cast<std::size_t>(s)][t] : 0.0;
                const double load = sc.train_demand[t] + p.ev_demand[t] - pv;
                const double mismatch = sch.p_buy[i] - sch.p_sell[i] + sch.p_dis[i] - sch.p_ch[i] - load;
                balance = std::max(balance, std::abs(mismatch) / scale);
                const auto bin = [](double u) { return std::min(std::abs(u), std::abs(u - 1.0)); };
                binary = std::max({binary, bin(sch.u_b[i]), bin(sch.u_g[i])});
                complement = std::max(complement, std::min(sch.p_buy[i], sch.p_sell[i]) / scale);
                if (!p.flags.ess_enabled)
                    continue;
                const double cap = p.ess.capacity_kwh;
                soc = std::max({soc, (sch.soc[i] - p.ess.soc_max_kwh()) / cap, (p.ess.soc_min_kwh() - sch.soc[i]) / cap});
                complement = std::max(complement, std::min(sch.p_ch[i] + sch.p_rbe[i], sch.p_dis[i]) / scale);
                rbe = std::max(rbe, (sch.p_rbe[i] - sc.rb_available[t]) / scale);
            }
        }
    }

    Outcome outcome() const {
        Outcome o;
        o.pass = instances > 0 && balance <= kBalanceTol && soc <= kSocTol && binary <= kBinaryTol &&
                 complement <= kComplementTol && rbe <= kRbeTol;
        o.detail = fmt("%ld solved problems, %ld schedules; max balance %.1e, soc excess %.1e, binary %.1e, "
                       "simultaneous flow %.1e, rbe excess %.1e",
                       instances, schedules, balance, std::max(0.0, soc), binary, complement, std::max(0.0, rbe));
        return o;
    }
};

Feasibility g_feasibility;

bool solved(SolveStatus st) { return st == SolveStatus::Optimal || st == SolveStatus::FeasibleGap; }

Outcome oracle_equivalence() {
    std::mt19937_64 rng(20240501);
    SolveOptions opt;
    opt.gap_tol = kTightGap;
    int feasible = 0, infeasible = 0, mismatches = 0;
    double worst = 0.0;
    const auto t0 = Clock::now();
    for (int k = 0; k < kOracleInstances; ++k) {
        const int T = 1 + k % 4;
        const int c = 1 + (k / 4) % 4;
        const auto problem = testing::random_instance(rng, T, c);
        const auto sol = solve(problem, opt);
        const auto bf = oracle::brute_force(problem);
        if (!bf.feasible) {
            ++infeasible;
            if (sol.status != SolveStatus::Infeasible)
                ++mismatches;
            continue;
        }
        ++feasible;
        if (!solved(sol.status)) {
            ++mismatches;
            continue;
        }
        g_feasibility.record(problem, sol);
        const double rel = std::abs(sol.objective_eur - bf.objective_eur) / std::max(1.0, std::abs(bf.objective_eur));
        worst = std::max(worst, rel);
        if (rel > kOracleRelTol)
            ++mismatches;
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = mismatches == 0 && feasible >= kOracleMinFeasible && secs < kOracleSeconds;
    o.detail = fmt("%d feasible + %d infeasible instances, %d mismatches, max rel diff %.1e, %.2f s", feasible,
                   infeasible, mismatches, worst, secs);
    return o;
}

// Daily instance with random storage sizing, PV share, fleet and day.
struct DailyInstance {
    ScenarioSet scenarios;
    StationConfig config;
    FleetSchedule fleet;
};

DailyInstance random_daily(std::mt19937_64& rng, int k) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto in = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
    DailyInstance d;
    const auto kind = k % 2 == 0 ? DayKind::Summer : DayKind::Autumn;
    const auto date = testing::day_start(2021, 1 + static_cast<unsigned>(rng() % 12), 1 + static_cast<unsigned>(rng() % 28));
    d.scenarios.push_back(synthetic_scenario("day" + std::to_string(k), date, kind, rng(), 60));
    auto& ess = d.config.ess;
    ess.capacity_kwh = in(200.0, 2000.0);
    ess.p_charge_max_kw = in(200.0, 1500.0);
    ess.p_discharge_max_kw = in(200.0, 1500.0);
    ess.eta_charge = in(0.85, 1.0);
    ess.eta_discharge = in(0.85, 1.0);
    ess.soc_min_fraction = in(0.0, 0.2);
    ess.soc0_fraction = in(ess.soc_min_fraction, 1.0);
    d.config.pv_penetration = in(0.05, 0.4);
    d.config.model.discharge_convention = u(rng) < 0.5 ? DischargeConvention::Multiply : DischargeConvention::Divide;
    d.fleet = synthetic_fleet(static_cast<int>(rng() % 8), rng());
    return d;
}

Outcome monotonicity() {
    std::mt19937_64 rng(777);
    EngineOptions opt;
    opt.solve.gap_tol = kTightGap;
    int violations = 0, compared = 0;
    double worst = 0.0;
    for (int k = 0; k < kMonotoneInstances; ++k) {
        const auto d = random_daily(rng, k);
        for (const auto& sc : d.scenarios)
            for (int t = 0; t < sc.grid().steps(); ++t)
                if (sc.buy_price[t] < 0.0 || sc.sell_price[t] < 0.0)
                    return {false, "synthetic prices are negative"};
        double cost[5] = {};
        for (int c = 1; c <= 4; ++c) {
            const auto r = run_case(d.scenarios, d.config, d.fleet, c, opt);
            g_feasibility.record(r.problem, r.solution);
            cost[c] = r.expected_cost_eur;
        }
        const auto check = [&](double lo, double hi) {
            const double excess = (lo - hi) / std::max(1.0, std::abs(hi));
            worst = std::max(worst, excess);
            if (excess > kMonotoneRelTol)
                ++violations;
        };
        check(cost[4], cost[2]);
        check(cost[2], cost[1]);
        check(cost[4], cost[3]);
        check(cost[3], cost[1]);
        ++compared;
    }
    Outcome o;
    o.pass = violations == 0 && compared >= 20;
    o.detail = fmt("%d daily instances, %d order violations, max rel excess %.1e", compared, violations,
                   std::max(0.0, worst));
    return o;
}

Outcome summer_pattern() {
    const std::filesystem::path data = EMS_EXAMPLE_DATA;
    const auto config = load_config(data / "station.json");
    ScenarioSet summer;
    for (auto& sc : load_scenarios(data / "scenarios", config.dt_minutes))
        if (sc.id == "summer")
            summer.push_back(sc);
    if (summer.size() != 1)
        return {false, "bundled summer scenario not found"};
    summer[0].probability = 1.0;
    const auto report = run_ablation(summer, config, ingest_fleet(data / "fleet.csv"));
    for (const auto& c : report.cases)
        g_feasibility.record(c.problem, c.solution);
    const double s2 = *report.find(2)->savings_pct, s3 = *report.find(3)->savings_pct,
                 s4 = *report.find(4)->savings_pct;
    Outcome o;
    o.pass = s2 > 0.0 && s3 > 0.0 && s4 > 0.0 && s4 > s2 && s4 > s3;
    o.detail = fmt("savings case 2 %.2f %%, case 3 %.2f %%, case 4 %.2f %% (base %.2f EUR)", s2, s3, s4,
                   report.find(1)->expected_cost_eur);
    return o;
}

Outcome pv_checks() {
    PvParams p;
    p.rated_kw = 100.0;
    p.r_c_wm2 = 150.0;
    p.r_std_wm2 = 1000.0;
    const double jump_c = std::abs(pv_power(std::nextafter(p.r_c_wm2, 0.0), p) - pv_power(p.r_c_wm2, p));
    const double jump_std = std::abs(pv_power(std::nextafter(p.r_std_wm2, 0.0), p) - pv_power(p.r_std_wm2, p));
    bool monotone = true;
    double prev = pv_power(0.0, p);
    for (int i = 1; i <= 12000; ++i) {
        const double v = pv_power(0.1 * i, p);
        monotone = monotone && v >= prev;
        prev = v;
    }
    const double hand = pv_power(75.0, p);
    Outcome o;
    o.pass = jump_c <= kPvContinuityTol * p.rated_kw && jump_std <= kPvContinuityTol * p.rated_kw && monotone &&
             hand == 3.75;
    o.detail = fmt("jump at r_c %.1e kW, at r_std %.1e kW, monotone %s, P(75) = %.17g kW", jump_c, jump_std,
                   monotone ? "yes" : "no", hand);
    return o;
}

Outcome ev_oracle() {
    std::mt19937_64 rng(4242);
    int mismatches = 0, soc_violations = 0;
    for (int k = 0; k < kFleets; ++k) {
        const auto fleet = testing::random_fleet(rng);
        const int minutes = k % 3 == 0 ? 1 : (k % 3 == 1 ? 15 : 60);
        const auto grid = TimeGrid::daily(testing::day_start(2021, 3, 1), minutes);
        const bool prorated = k % 2 == 0;
        const auto policy = prorated ? PartialStepDemand::Prorated : PartialStepDemand::Nominal;
        const auto demand = ev_demand_profile(fleet, grid, policy);
        const auto oracle = testing::simulate_fleet_oracle(fleet, grid, prorated);
        for (int t = 0; t < grid.steps(); ++t)
            if (demand[t] != oracle.demand[static_cast<std::size_t>(t)])
                ++mismatches;
        const auto sim = simulate_fleet(fleet, grid, policy);
        for (std::size_t v = 0; v < fleet.vehicles.size(); ++v)
            for (double soc : sim.soc_kwh[v])
                if (soc < 0.0 || soc > fleet.vehicles[v].battery_capacity_kwh)
                    ++soc_violations;
    }
    Outcome o;
    o.pass = mismatches == 0 && soc_violations == 0;
    o.detail = fmt("%d fleets, %d differing steps, %d SoC bound violations", kFleets, mismatches, soc_violations);
    return o;
}

Outcome scale() {
    const auto set = synthetic_scenario_set(kScaleScenarios, 42, kScaleStepMinutes);
    const auto problem = build_problem(set, testing::daily_station(), synthetic_fleet(6, 7), CaseFlags::for_case(4));
    SolveOptions opt;
    opt.gap_tol = kScaleGap;
    opt.time_limit_s = kScaleSeconds;
    opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto t0 = Clock::now();
    const auto sol = solve(problem, opt);
    const double secs = seconds_since(t0);
    g_feasibility.record(problem, sol);
    int optimal = 0;
    for (const auto& out : sol.outcomes)
        optimal += out.status == SolveStatus::Optimal && out.gap <= kScaleGap;
    Outcome o;
    o.pass = optimal == kScaleScenarios && secs < kScaleSeconds;
    o.detail = fmt("%d x %d steps, %d/%d within gap %.0e, %.1f s on %d thread(s)", kScaleScenarios,
                   problem.steps(), optimal, kScaleScenarios, kScaleGap, secs, opt.jobs);
    return o;
}

Outcome linearity() {
    const auto set = synthetic_scenario_set(kLinearityScenarios, 1234, 15);
    const auto fleet = synthetic_fleet(4, 99);
    SolveOptions joint_opt;
    joint_opt.gap_tol = kTightGap;
    joint_opt.joint = true;
    const auto joint_problem = build_problem(set, testing::daily_station(), fleet, CaseFlags::for_case(4));
    const auto joint = solve(joint_problem, joint_opt);
    if (joint.status != SolveStatus::Optimal)
        return {false, std::string("joint solve ended ") + to_string(joint.status)};
    g_feasibility.record(joint_problem, joint);

    // Solo solves use the PV rating derived from the whole set.
    StationConfig solo_config = testing::daily_station();
    solo_config.pv_penetration.reset();
    solo_config.pv.rated_kw = joint_problem.pv.rated_kw;
    SolveOptions solo_opt;
    solo_opt.gap_tol = kTightGap;
    double weighted = 0.0;
    for (const auto& sc : set) {
        auto solo = sc;
        solo.probability = 1.0;
        const auto p = build_problem({solo}, solo_config, fleet, CaseFlags::for_case(4));
        const auto sol = solve(p, solo_opt);
        if (sol.status != SolveStatus::Optimal)
            return {false, "solo solve of " + sc.id + " ended " + to_string(sol.status)};
        weighted += sc.probability * sol.objective_eur;
    }
    const double rel = std::abs(joint.objective_eur - weighted) / std::abs(weighted);
    Outcome o;
    o.pass = rel <= kLinearityRelTol;
    o.detail = fmt("joint %.9f EUR, weighted solo %.9f EUR, rel diff %.1e", joint.objective_eur, weighted, rel);
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<Outcome()> run;
        Outcome outcome;
    };
    std::vector<Criterion> criteria{
        {1, "oracle equivalence", oracle_equivalence, {}},
        {3, "resource monotonicity", monotonicity, {}},
        {4, "summer day savings pattern", summer_pattern, {}},
        {5, "PV model checks", pv_checks, {}},
        {6, "EV demand oracle", ev_oracle, {}},
        {7, "scale and runtime", scale, {}},
        {8, "expectation linearity", linearity, {}},
    };
    for (auto& c : criteria) {
        try {
            c.outcome = c.run();
        } catch (const std::exception& e) {
            c.outcome = {false, std::string("exception: ") + e.what()};
        }
    }
    // Feasibility covers every problem solved by the other criteria.
    criteria.insert(criteria.begin() + 1, {2, "feasibility residuals", nullptr, g_feasibility.outcome()});

    bool all = true;
    for (const auto& c : criteria) {
        std::printf("%s criterion %d (%s): %s\n", c.outcome.pass ? "PASS" : "FAIL", c.number, c.name,
                    c.outcome.detail.c_str());
        all = all && c.outcome.pass;
    }
    return all ? 0 : 1;
}
