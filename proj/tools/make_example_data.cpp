// Regenerates the bundled example dataset:
//   make_example_data <output dir>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ems/synthetic.hpp"

namespace fs = std::filesystem;

namespace {

void write(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

constexpr const char* kStation = R"({
  "dt_minutes": 15,
  "ess": {
    "capacity_kwh": 1000,
    "p_charge_max_kw": 1000,
    "p_discharge_max_kw": 1000,
    "eta_charge": 0.95,
    "eta_discharge": 0.95,
    "self_discharge": 0.0,
    "soc0_fraction": 0.5,
    "soc_min_fraction": 0.1,
    "soc_max_fraction": 1.0
  },
  "grid": { "p_buy_max_kw": 5000, "p_sell_max_kw": 5000 },
  "pv": { "penetration": 0.2, "r_c_wm2": 150, "r_std_wm2": 1000 },
  "ev": { "partial_step": "prorated" },
  "model": { "discharge_convention": "multiply", "enforce_terminal_soc": false }
}
)";

// Four hourly steps in the morning: the storage is charged by braking
// energy and cheap power, then discharged into the price peak.
constexpr const char* kTinyInstance = R"({
  "case": 4,
  "step_minutes": 60,
  "station": {
    "ess": { "capacity_kwh": 400, "p_charge_max_kw": 300, "p_discharge_max_kw": 300,
             "eta_charge": 0.9, "eta_discharge": 0.9, "soc0_fraction": 0.5,
             "soc_min_fraction": 0.1, "soc_max_fraction": 1.0 },
    "grid": { "p_buy_max_kw": 2000, "p_sell_max_kw": 2000 },
    "pv": { "rated_kw": 150 }
  },
  "train_demand_kw": [420, 610, 980, 760],
  "rb_available_kw": [120, 260, 0, 180],
  "radiation_wm2": [0, 90, 420, 880],
  "ev_demand_kw": [0, 300, 300, 0],
  "buy_price_eur_per_kwh": [0.06, 0.08, 0.19, 0.14]
}
)";

// Demand above the import limit with nothing else to cover it.
constexpr const char* kTinyInfeasible = R"({
  "case": 1,
  "step_minutes": 60,
  "station": { "grid": { "p_buy_max_kw": 500, "p_sell_max_kw": 500 } },
  "train_demand_kw": [400, 650],
  "buy_price_eur_per_kwh": [0.1, 0.1]
}
)";

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <output dir>\n", argv[0]);
        return 2;
    }
    try {
        const fs::path root = argv[1];
        fs::create_directories(root / "scenarios");
        using namespace std::chrono;
        const auto day = [](year_month_day d) { return ems::Timestamp{sys_days{d}.time_since_epoch()}; };
        ems::write_scenario_dir(root / "scenarios" / "summer", "summer", 0.5,
                                ems::synthetic_day(day(year{2021} / July / 14), ems::DayKind::Summer, 2021071401));
        ems::write_scenario_dir(root / "scenarios" / "autumn", "autumn", 0.5,
                                ems::synthetic_day(day(year{2021} / October / 20), ems::DayKind::Autumn, 2021102001));
        write(root / "fleet.csv", ems::fleet_csv(ems::synthetic_fleet(6, 7)));
        write(root / "station.json", kStation);
        write(root / "tiny_instance.json", kTinyInstance);
        write(root / "tiny_infeasible.json", kTinyInfeasible);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
