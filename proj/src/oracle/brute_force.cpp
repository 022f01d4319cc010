#include "ems/oracle/brute_force.hpp"

#include <string>

#include "ems/error.hpp"
#include "ems/oracle/dense_lp.hpp"

namespace ems::oracle {

BruteForceResult brute_force(const EmsProblem& problem) {
    if (problem.num_scenarios() != 1)
        throw DomainError("brute-force oracle handles exactly one scenario, got " +
                          std::to_string(problem.num_scenarios()));
    const int T = problem.steps();
    if (T > kBruteForceMaxSteps)
        throw DomainError("brute-force oracle handles at most " + std::to_string(kBruteForceMaxSteps) +
                          " steps, got " + std::to_string(T));

    const auto& sc = problem.scenarios.front();
    const auto& ess = problem.ess;
    const double pi = sc.probability;
    const double dt = problem.dt_hours();
    const bool with_ess = problem.flags.ess_enabled;
    const double keep = 1.0 - ess.self_discharge;
    const double k_dis =
        problem.model.discharge_convention == DischargeConvention::Multiply ? ess.eta_discharge : 1.0 / ess.eta_discharge;

    // Per step: g, s and, with storage, c, d, r, soc.
    const int per = with_ess ? 6 : 2;
    const auto n = static_cast<std::size_t>(per * T);
    const auto col = [per](int t, int k) { return static_cast<std::size_t>(per * t + k); };
    enum { G = 0, S = 1, C = 2, D = 3, R = 4, E = 5 };

    const int bits = with_ess ? 2 * T : T;
    BruteForceResult best;
    for (long mask = 0; mask < (1L << bits); ++mask) {
        ++best.assignments;
        DenseLp lp;
        lp.cost.assign(n, 0.0);
        lp.lower.assign(n, 0.0);
        lp.upper.assign(n, 0.0);
        for (int t = 0; t < T; ++t) {
            const bool buying = (mask >> t) & 1;
            lp.cost[col(t, G)] = pi * sc.buy_price[t] * dt;
            lp.cost[col(t, S)] = -pi * sc.sell_price[t] * dt;
            lp.upper[col(t, G)] = buying ? problem.grid.p_buy_max_kw : 0.0;
            lp.upper[col(t, S)] = buying ? 0.0 : problem.grid.p_sell_max_kw;

            std::vector<double> balance(n, 0.0);
            balance[col(t, G)] = 1.0;
            balance[col(t, S)] = -1.0;
            if (with_ess) {
                const bool charging = (mask >> (T + t)) & 1;
                lp.upper[col(t, C)] = charging ? ess.p_charge_max_kw : 0.0;
                lp.upper[col(t, R)] = charging ? sc.rb_available[t] : 0.0;
                lp.upper[col(t, D)] = charging ? 0.0 : ess.p_discharge_max_kw;
                lp.lower[col(t, E)] = ess.soc_min_kwh();
                lp.upper[col(t, E)] = ess.soc_max_kwh();
                if (charging) {
                    std::vector<double> cap(n, 0.0);
                    cap[col(t, C)] = 1.0;
                    cap[col(t, R)] = 1.0;
                    lp.a_ub.push_back(std::move(cap));
                    lp.b_ub.push_back(ess.p_charge_max_kw);
                }
                std::vector<double> rec(n, 0.0);
                rec[col(t, E)] = 1.0;
                rec[col(t, C)] = -ess.eta_charge * dt;
                rec[col(t, R)] = -ess.eta_charge * dt;
                rec[col(t, D)] = k_dis * dt;
                double rhs = 0.0;
                if (t == 0)
                    rhs = keep * ess.soc0_kwh();
                else
                    rec[col(t - 1, E)] = -keep;
                lp.a_eq.push_back(std::move(rec));
                lp.b_eq.push_back(rhs);
                balance[col(t, D)] = 1.0;
                balance[col(t, C)] = -1.0;
            }
            lp.a_eq.push_back(std::move(balance));
            lp.b_eq.push_back(problem.net_load(0, t));
        }
        if (with_ess && problem.model.enforce_terminal_soc) {
            std::vector<double> term(n, 0.0);
            term[col(T - 1, E)] = -1.0;
            lp.a_ub.push_back(std::move(term));
            lp.b_ub.push_back(-ess.soc0_kwh());
        }

        const auto r = solve_dense_lp(lp);
        if (r.status != DenseLpResult::Status::Optimal)
            continue;
        ++best.feasible_assignments;
        if (!best.feasible || r.objective < best.objective_eur) {
            best.feasible = true;
            best.objective_eur = r.objective;
        }
    }
    return best;
}

} // namespace ems::oracle
