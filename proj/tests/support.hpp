#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ems/ems_problem.hpp"
#include "ems/synthetic.hpp"

namespace ems::testing {

inline Timestamp day_start(int year_, unsigned month_, unsigned day_) {
    using namespace std::chrono;
    return Timestamp{sys_days{year{year_} / month{month_} / day{day_}}.time_since_epoch()};
}

// Scenario on a grid of T steps of step_minutes from explicit series. Empty
// optional series are zero; an empty sell price copies the buy price.
inline Scenario make_scenario(const std::string& id, int step_minutes, const std::vector<double>& demand,
                              const std::vector<double>& buy, std::vector<double> rb = {},
                              std::vector<double> radiation = {}, std::vector<double> sell = {},
                              double probability = 1.0) {
    const auto n = demand.size();
    const TimeGrid grid(day_start(2021, 6, 1), static_cast<int>(n), step_minutes * 60LL);
    if (rb.empty())
        rb.assign(n, 0.0);
    if (radiation.empty())
        radiation.assign(n, 0.0);
    if (sell.empty())
        sell = buy;
    return {id,
            probability,
            Profile(grid, ProfileKind::TrainDemand, demand),
            Profile(grid, ProfileKind::RbAvailable, std::move(rb)),
            Profile(grid, ProfileKind::Radiation, std::move(radiation)),
            Profile(grid, ProfileKind::Price, buy),
            Profile(grid, ProfileKind::Price, std::move(sell))};
}

// Single-scenario problem with given EV demand; PV rating and storage come
// from `config`.
inline EmsProblem make_problem(const Scenario& sc, const StationConfig& config, int case_number,
                               std::vector<double> ev = {}) {
    if (ev.empty())
        ev.assign(static_cast<std::size_t>(sc.grid().steps()), 0.0);
    return build_problem({sc}, config, Profile(sc.grid(), ProfileKind::Power, std::move(ev)),
                         CaseFlags::for_case(case_number));
}

struct RandomInstanceOptions {
    bool allow_negative_prices = false;
    bool allow_infeasible = true; // occasionally tight import limits
};

// Random station and scenario with T steps of one hour. Parameters are drawn
// so that storage gating, SoC bounds and exchange limits all bind on some
// instances.
inline EmsProblem random_instance(std::mt19937_64& rng, int T, int case_number,
                                  const RandomInstanceOptions& opt = {}) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto in = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
    StationConfig cfg;
    cfg.ess.capacity_kwh = in(100.0, 800.0);
    cfg.ess.p_charge_max_kw = in(50.0, 500.0);
    cfg.ess.p_discharge_max_kw = in(50.0, 500.0);
    cfg.ess.eta_charge = in(0.8, 1.0);
    cfg.ess.eta_discharge = in(0.8, 1.0);
    cfg.ess.self_discharge = u(rng) < 0.5 ? 0.0 : in(0.0, 0.05);
    cfg.ess.soc_min_fraction = in(0.0, 0.3);
    cfg.ess.soc_max_fraction = in(0.7, 1.0);
    cfg.ess.soc0_fraction = in(cfg.ess.soc_min_fraction, cfg.ess.soc_max_fraction);
    cfg.grid.p_buy_max_kw = opt.allow_infeasible && u(rng) < 0.15 ? in(100.0, 500.0) : in(900.0, 2000.0);
    cfg.grid.p_sell_max_kw = in(100.0, 2000.0);
    cfg.pv.rated_kw = in(0.0, 600.0);
    cfg.model.discharge_convention = u(rng) < 0.5 ? DischargeConvention::Multiply : DischargeConvention::Divide;
    cfg.model.enforce_terminal_soc = u(rng) < 0.25;

    std::vector<double> demand, rb, rad, buy, sell, ev;
    for (int t = 0; t < T; ++t) {
        demand.push_back(in(50.0, 800.0));
        rb.push_back(u(rng) < 0.3 ? 0.0 : in(0.0, 400.0));
        rad.push_back(u(rng) < 0.2 ? 0.0 : in(0.0, 1200.0));
        const double lo = opt.allow_negative_prices ? -0.05 : 0.01;
        buy.push_back(in(lo, 0.3));
        // Sell prices mostly equal to buy prices, sometimes lower or higher.
        const double r = u(rng);
        sell.push_back(r < 0.6 ? buy.back() : (r < 0.85 ? buy.back() * in(0.3, 1.0) : buy.back() * in(1.0, 1.5)));
        ev.push_back(u(rng) < 0.5 ? 0.0 : 300.0 * std::floor(in(0.0, 2.99)));
    }
    const Scenario sc = make_scenario("random", 60, demand, buy, rb, rad, sell);
    return make_problem(sc, cfg, case_number, ev);
}

// Station used for daily tests: the example configuration with PV sized at
// 20% of the peak train demand.
inline StationConfig daily_station() {
    StationConfig cfg;
    cfg.pv_penetration = 0.2;
    return cfg;
}

// Independent EV demand simulation, looping vehicle by vehicle over the
// steps with dwell membership computed directly from the dwell times.
struct FleetOracle {
    std::vector<double> demand;
    std::vector<std::vector<double>> soc; // [vehicle][step], start of step
};

inline FleetOracle simulate_fleet_oracle(const FleetSchedule& fleet, const TimeGrid& grid, bool prorated) {
    const int T = grid.steps();
    const std::int64_t step = grid.step_seconds();
    const double dt = grid.dt_hours();
    FleetOracle out;
    out.demand.assign(static_cast<std::size_t>(T), 0.0);
    for (const auto& v : fleet.vehicles) {
        std::vector<double> soc_track;
        double soc = v.start_soc_kwh();
        std::int64_t first_arrival = -1, last_departure = -1;
        if (!v.dwells.empty()) {
            first_arrival = v.dwells.front().arrival_s / step * step;
            last_departure = (v.dwells.back().departure_s + step - 1) / step * step;
        }
        for (int t = 0; t < T; ++t) {
            soc_track.push_back(soc);
            const std::int64_t begin = t * step;
            bool at_station = false;
            for (const auto& d : v.dwells) {
                // Outward rounding: the step is covered when it overlaps the dwell.
                const std::int64_t a = d.arrival_s / step * step;
                const std::int64_t b = (d.departure_s + step - 1) / step * step;
                if (begin >= a && begin < b)
                    at_station = true;
            }
            const bool on_duty = first_arrival >= 0 && begin >= first_arrival && begin < last_departure;
            if (at_station) {
                if (soc < v.battery_capacity_kwh) {
                    const double room = v.battery_capacity_kwh - soc;
                    const double full_step = v.eta_charge * v.nominal_charge_kw * dt;
                    double draw = v.nominal_charge_kw;
                    if (prorated && full_step > room)
                        draw = room / (v.eta_charge * dt);
                    out.demand[static_cast<std::size_t>(t)] += draw;
                    soc = full_step > room ? v.battery_capacity_kwh : soc + full_step;
                }
            } else if (on_duty) {
                soc = std::max(0.0, soc - v.eta_discharge * v.route_consumption_kwh_per_min * dt * 60.0);
            }
        }
        out.soc.push_back(std::move(soc_track));
    }
    return out;
}

// Random valid fleet: 1-8 buses with ordered, non-overlapping dwells at
// minute resolution and varied battery parameters.
inline FleetSchedule random_fleet(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto in = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
    FleetSchedule fleet;
    const int buses = 1 + static_cast<int>(rng() % 8);
    for (int b = 0; b < buses; ++b) {
        Vehicle v;
        v.id = "v" + std::to_string(b);
        v.battery_capacity_kwh = in(100.0, 400.0);
        v.nominal_charge_kw = in(50.0, 450.0);
        v.route_consumption_kwh_per_min = in(0.2, 1.5);
        v.eta_charge = u(rng) < 0.5 ? 1.0 : in(0.85, 1.0);
        v.eta_discharge = u(rng) < 0.5 ? 1.0 : in(0.85, 1.0);
        if (u(rng) < 0.4)
            v.initial_soc_kwh = in(0.0, v.battery_capacity_kwh);
        std::int64_t t = static_cast<std::int64_t>(in(0.0, 8.0 * 60)) * 60;
        while (true) {
            const std::int64_t dep = t + static_cast<std::int64_t>(in(3.0, 50.0)) * 60;
            if (dep > 86400)
                break;
            v.dwells.push_back({t, dep});
            t = dep + static_cast<std::int64_t>(in(1.0, 120.0)) * 60;
        }
        fleet.vehicles.push_back(std::move(v));
    }
    return fleet;
}

} // namespace ems::testing
