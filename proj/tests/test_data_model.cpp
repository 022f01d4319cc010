#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <functional>
#include <fstream>
#include <numeric>

#include "ems/error.hpp"
#include "ems/ingest.hpp"
#include "ems/synthetic.hpp"
#include "support.hpp"

using namespace ems;

namespace {

std::string minute_csv(int minutes, const std::function<double(int)>& value, const char* unit = nullptr,
                       int skip_from = -1, int skip_to = -1) {
    std::string out = unit ? std::string("# unit: ") + unit + "\n" : std::string();
    out += "timestamp,value\n";
    const TimeGrid g(testing::day_start(2021, 3, 1), minutes, 60);
    for (int m = 0; m < minutes; ++m) {
        if (m >= skip_from && m < skip_to)
            continue;
        out += format_timestamp(g.time_at(m)) + "," + std::to_string(value(m)) + "\n";
    }
    return out;
}

} // namespace

TEST_CASE("time grid covers a day and rejects bad steps") {
    const auto g = TimeGrid::daily(testing::day_start(2021, 1, 1), 15);
    CHECK(g.steps() == 96);
    CHECK(g.dt_hours() == doctest::Approx(0.25));
    CHECK(std::abs(g.steps() * g.dt_hours() - 24.0) < 1e-9);
    CHECK(g.covers_day());
    CHECK(TimeGrid::daily(testing::day_start(2021, 1, 1), 1).steps() == 1440);
    CHECK_THROWS(TimeGrid::daily(testing::day_start(2021, 1, 1), 7));
    CHECK_THROWS(TimeGrid(testing::day_start(2021, 1, 1), 4, 0));
}

TEST_CASE("timestamps parse with fixed offsets") {
    const auto a = parse_timestamp("2021-07-14T02:00:00+02:00");
    const auto b = parse_timestamp("2021-07-14 00:00Z");
    CHECK(a == b);
    CHECK(format_timestamp(a) == "2021-07-14T00:00:00Z");
    CHECK_THROWS_AS(parse_timestamp("14/07/2021"), FormatError);
    CHECK(parse_time_of_day("08:15") == 8 * 3600 + 15 * 60);
    CHECK(parse_time_of_day("24:00") == 86400);
}

TEST_CASE("1-minute demand averaged onto a 15-minute grid") {
    const auto grid = TimeGrid::daily(testing::day_start(2021, 3, 1), 15);
    const auto f = [](int m) { return static_cast<double>((m * 37) % 101); };
    const auto p = parse_profile_csv(minute_csv(1440, f), ProfileKind::TrainDemand, grid);
    REQUIRE(p.size() == 96);
    for (int t = 0; t < 96; ++t) {
        double mean = 0.0;
        for (int k = 0; k < 15; ++k)
            mean += f(15 * t + k);
        CHECK(p[t] == doctest::Approx(mean / 15.0).epsilon(1e-12));
    }
}

TEST_CASE("resampling conserves energy") {
    const auto grid = TimeGrid::daily(testing::day_start(2021, 3, 1), 15);
    const auto f = [](int m) { return 100.0 + 50.0 * std::sin(m / 40.0) + (m % 7); };
    const auto p = parse_profile_csv(minute_csv(1440, f), ProfileKind::TrainDemand, grid);
    double in = 0.0;
    for (int m = 0; m < 1440; ++m)
        in += std::stod(std::to_string(f(m))) / 60.0;
    double out = 0.0;
    for (int t = 0; t < 96; ++t)
        out += p[t] * grid.dt_hours();
    CHECK(std::abs(out - in) <= 1e-9 * in);
}

TEST_CASE("hourly prices repeat onto a finer grid and convert from EUR/MWh") {
    const auto grid = TimeGrid::daily(testing::day_start(2021, 3, 1), 15);
    std::string csv = "# unit: EUR/MWh\ntimestamp,value\n";
    const TimeGrid hours(testing::day_start(2021, 3, 1), 24, 3600);
    for (int h = 0; h < 24; ++h)
        csv += format_timestamp(hours.time_at(h)) + "," + std::to_string(100 + h) + "\n";
    const auto p = parse_profile_csv(csv, ProfileKind::Price, grid);
    CHECK(p[0] == doctest::Approx(0.1));
    CHECK(p[3] == doctest::Approx(0.1));
    CHECK(p[4] == doctest::Approx(0.101));
    CHECK(p[95] == doctest::Approx(0.123));
}

TEST_CASE("negative prices are accepted, negative demand is not") {
    const auto grid = TimeGrid::daily(testing::day_start(2021, 3, 1), 60);
    const auto neg = [](int) { return -5.0; };
    CHECK(parse_profile_csv(minute_csv(1440, neg), ProfileKind::Price, grid)[0] == doctest::Approx(-5.0));
    CHECK_THROWS_AS(parse_profile_csv(minute_csv(1440, neg), ProfileKind::TrainDemand, grid), ValidationError);
    CHECK_THROWS_AS(parse_profile_csv(minute_csv(1440, neg), ProfileKind::Radiation, grid), ValidationError);
    CHECK_THROWS_AS(parse_profile_csv(minute_csv(1440, neg), ProfileKind::RbAvailable, grid), ValidationError);
}

TEST_CASE("a 30-minute gap is reported with its interval") {
    const auto grid = TimeGrid::daily(testing::day_start(2021, 3, 1), 15);
    const auto one = [](int) { return 1.0; };
    try {
        parse_profile_csv(minute_csv(1440, one, nullptr, 600, 630), ProfileKind::TrainDemand, grid, "demand.csv");
        FAIL("expected a gap error");
    } catch (const GapError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("2021-03-01T10:00:00Z") != std::string::npos);
        CHECK(msg.find("2021-03-01T10:30:00Z") != std::string::npos);
        CHECK(msg.find("demand.csv") != std::string::npos);
    }
}

TEST_CASE("unit tags and headers are checked") {
    const auto grid = TimeGrid::daily(testing::day_start(2021, 3, 1), 60);
    const auto one = [](int) { return 1.0; };
    CHECK_THROWS_AS(parse_profile_csv(minute_csv(1440, one, "furlongs"), ProfileKind::TrainDemand, grid),
                    FormatError);
    CHECK_THROWS_AS(parse_profile_csv(minute_csv(1440, one, "kW"), ProfileKind::Price, grid), FormatError);
    CHECK(parse_profile_csv(minute_csv(1440, one, "MW"), ProfileKind::TrainDemand, grid)[0] ==
          doctest::Approx(1000.0));
    CHECK_THROWS_AS(parse_profile_csv("time,val\n", ProfileKind::TrainDemand, grid), FormatError);
    CHECK_THROWS_AS(parse_profile_csv("timestamp,value\n2021-03-01T00:00:00Z,abc\n", ProfileKind::TrainDemand, grid),
                    FormatError);
}

TEST_CASE("a 7-minute source does not fit a 15-minute grid") {
    const auto grid = TimeGrid::daily(testing::day_start(2021, 3, 1), 15);
    std::string csv = "timestamp,value\n";
    for (int m = 0; m < 1440; m += 7)
        csv += format_timestamp(grid.start() + std::chrono::minutes(m)) + ",1\n";
    CHECK_THROWS_AS(parse_profile_csv(csv, ProfileKind::TrainDemand, grid), FormatError);
}

TEST_CASE("ingestion is deterministic") {
    const auto grid = TimeGrid::daily(testing::day_start(2021, 3, 1), 15);
    const auto f = [](int m) { return std::fmod(m * 1.37, 17.0); };
    const std::string csv = minute_csv(1440, f);
    const auto a = parse_profile_csv(csv, ProfileKind::TrainDemand, grid);
    const auto b = parse_profile_csv(csv, ProfileKind::TrainDemand, grid);
    CHECK(serialize(a) == serialize(b));
}

TEST_CASE("profiles enforce length and finiteness") {
    const TimeGrid g(testing::day_start(2021, 3, 1), 3, 3600);
    CHECK_THROWS_AS(Profile(g, ProfileKind::Price, {1.0, 2.0}), ValidationError);
    CHECK_THROWS_AS(Profile(g, ProfileKind::Price, {1.0, NAN, 2.0}), ValidationError);
    CHECK_NOTHROW(Profile(g, ProfileKind::Price, {1.0, -2.0, 2.0}));
}

TEST_CASE("scenario set validation") {
    SUBCASE("200 equally likely scenarios are valid") {
        const auto set = synthetic_scenario_set(200, 3, 60);
        CHECK(validate_scenario_set(set).empty());
        CHECK(set.front().probability == doctest::Approx(1.0 / 200));
    }
    SUBCASE("probabilities summing to 1.2 are flagged") {
        const std::vector<double> d(24, 1.0), p(24, 0.1);
        ScenarioSet set{testing::make_scenario("a", 60, d, p, {}, {}, {}, 0.6),
                        testing::make_scenario("b", 60, d, p, {}, {}, {}, 0.6)};
        const auto v = validate_scenario_set(set);
        REQUIRE(v.size() == 1);
        CHECK(v[0].kind == Violation::Kind::ProbabilitySum);
        CHECK(v[0].message.find("1.2") != std::string::npos);
    }
    SUBCASE("mismatched grids are flagged") {
        ScenarioSet set{testing::make_scenario("a", 60, std::vector<double>(24, 1.0), std::vector<double>(24, 0.1),
                                               {}, {}, {}, 0.5),
                        testing::make_scenario("b", 30, std::vector<double>(48, 1.0), std::vector<double>(48, 0.1),
                                               {}, {}, {}, 0.5)};
        const auto v = validate_scenario_set(set);
        CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.kind == Violation::Kind::Grid; }));
    }
    SUBCASE("an empty set is flagged") {
        const auto v = validate_scenario_set({});
        REQUIRE(v.size() == 1);
        CHECK(v[0].kind == Violation::Kind::Empty);
    }
}

TEST_CASE("fleet CSV parsing and validation") {
    const std::string csv = "vehicle_id,capacity_kwh,charge_kw,consumption_kwh_per_min,arrival,departure\n"
                            "bus1,280,300,0.87,08:00,08:15\n"
                            "bus1,280,300,0.87,09:00,09:20\n"
                            "bus2,250,150,0.5,07:30:30,08:00\n";
    const auto fleet = parse_fleet_csv(csv);
    REQUIRE(fleet.vehicles.size() == 2);
    CHECK(fleet.vehicles[0].dwells.size() == 2);
    CHECK(fleet.vehicles[0].dwells[0].arrival_s == 8 * 3600);
    CHECK(fleet.vehicles[1].dwells[0].arrival_s == 7 * 3600 + 30 * 60 + 30);
    CHECK(fleet_violations(fleet).empty());

    const auto overlap = parse_fleet_csv("vehicle_id,capacity_kwh,charge_kw,consumption_kwh_per_min,arrival,departure\n"
                                         "bus1,280,300,0.87,08:00,08:30\n"
                                         "bus1,280,300,0.87,08:20,09:00\n");
    CHECK_FALSE(fleet_violations(overlap).empty());
    CHECK_THROWS_AS(parse_fleet_csv("id,cap\nx,1\n"), FormatError);
}

TEST_CASE("fleet CSV round-trips through the writer") {
    const auto fleet = synthetic_fleet(4, 11);
    const auto back = parse_fleet_csv(fleet_csv(fleet));
    REQUIRE(back.vehicles.size() == fleet.vehicles.size());
    for (std::size_t v = 0; v < fleet.vehicles.size(); ++v) {
        REQUIRE(back.vehicles[v].dwells.size() == fleet.vehicles[v].dwells.size());
        for (std::size_t d = 0; d < fleet.vehicles[v].dwells.size(); ++d) {
            CHECK(back.vehicles[v].dwells[d].arrival_s == fleet.vehicles[v].dwells[d].arrival_s);
            CHECK(back.vehicles[v].dwells[d].departure_s == fleet.vehicles[v].dwells[d].departure_s);
        }
    }
}

TEST_CASE("station config parsing") {
    const auto cfg = parse_config(R"({"ess": {"capacity_kwh": 500}, "pv": {"penetration": 0.2},
                                      "model": {"discharge_convention": "divide"}})");
    CHECK(cfg.ess.capacity_kwh == 500);
    REQUIRE(cfg.pv_penetration);
    CHECK(*cfg.pv_penetration == doctest::Approx(0.2));
    CHECK(cfg.model.discharge_convention == DischargeConvention::Divide);
    CHECK(cfg.grid.p_sell_max_kw == cfg.grid.p_buy_max_kw);
    CHECK_THROWS_AS(parse_config(R"({"ess": {"capacity": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"ess": {"soc_min_fraction": 0.6, "soc0_fraction": 0.5}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"pv": {"r_c_wm2": 1200}})"), ConfigError);
    CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
}

TEST_CASE("scenario directories load in order with default probabilities") {
    const auto dir = std::filesystem::temp_directory_path() / "ems_test_scenarios";
    std::filesystem::remove_all(dir);
    const auto day = synthetic_day(testing::day_start(2021, 7, 1), DayKind::Summer, 5);
    write_scenario_dir(dir / "b", "second", 0.25, day);
    write_scenario_dir(dir / "a", "first", 0.75, day);
    auto set = load_scenarios(dir, 15);
    REQUIRE(set.size() == 2);
    CHECK(set[0].id == "first");
    CHECK(set[0].probability == doctest::Approx(0.75));
    CHECK(set[0].train_demand.size() == 96);
    CHECK(validate_scenario_set(set).empty());

    // Without probabilities, the mass is shared equally.
    for (const char* sub : {"a", "b"}) {
        std::ofstream meta(dir / sub / "scenario.meta");
        meta << "id=" << sub << "\n";
    }
    set = load_scenarios(dir, 15);
    CHECK(set[0].probability == doctest::Approx(0.5));
    CHECK(set[1].probability == doctest::Approx(0.5));

    std::filesystem::remove(dir / "a" / "price.csv");
    CHECK_THROWS_AS(load_scenarios(dir, 15), DataError);
    std::filesystem::remove_all(dir);
}
