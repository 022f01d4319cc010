#include "ems/instance.hpp"

#include <algorithm>
#include <iterator>

#include <json.hpp>

#include "ems/error.hpp"
#include "ems/ingest.hpp"

namespace ems {

namespace {

using nlohmann::json;

std::vector<double> series(const json& root, const char* key, const std::string& source) {
    if (!root.contains(key))
        return {};
    try {
        return root.at(key).get<std::vector<double>>();
    } catch (const json::exception&) {
        throw ConfigError(source + ": '" + key + "' must be an array of numbers");
    }
}

} // namespace

EmsProblem parse_instance(const std::string& json_text, const std::string& source) {
    json root;
    try {
        root = json::parse(json_text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError(source + ": " + e.what());
    }
    if (!root.is_object())
        throw ConfigError(source + ": instance must be a JSON object");
    static const char* const known[] = {"case",           "step_minutes",          "station",
                                        "train_demand_kw", "rb_available_kw",      "radiation_wm2",
                                        "ev_demand_kw",   "buy_price_eur_per_kwh", "sell_price_eur_per_kwh"};
    for (const auto& [key, _] : root.items())
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            throw ConfigError(source + ": unknown instance key '" + key + "'");

    int case_number = 4;
    int step_minutes = 60;
    try {
        if (root.contains("case"))
            case_number = root.at("case").get<int>();
        if (root.contains("step_minutes"))
            step_minutes = root.at("step_minutes").get<int>();
    } catch (const json::exception&) {
        throw ConfigError(source + ": 'case' and 'step_minutes' must be integers");
    }
    if (step_minutes <= 0)
        throw ConfigError(source + ": step_minutes must be positive");
    const StationConfig config = parse_config(root.contains("station") ? root.at("station").dump() : "{}",
                                              source + ":station");

    const auto demand = series(root, "train_demand_kw", source);
    const auto buy = series(root, "buy_price_eur_per_kwh", source);
    if (demand.empty())
        throw ConfigError(source + ": 'train_demand_kw' is required and must be non-empty");
    if (buy.empty())
        throw ConfigError(source + ": 'buy_price_eur_per_kwh' is required");
    const std::size_t steps = demand.size();
    const auto or_default = [&](std::vector<double> v, const std::vector<double>& fallback, const char* key) {
        if (v.empty())
            v = fallback;
        if (v.size() != steps)
            throw ConfigError(source + ": '" + key + "' has " + std::to_string(v.size()) + " values, expected " +
                              std::to_string(steps));
        return v;
    };
    const std::vector<double> zeros(steps, 0.0);

    const TimeGrid grid(Timestamp{}, static_cast<int>(steps), step_minutes * 60LL);
    Scenario sc{"instance",
                1.0,
                Profile(grid, ProfileKind::TrainDemand, demand),
                Profile(grid, ProfileKind::RbAvailable, or_default(series(root, "rb_available_kw", source), zeros,
                                                                   "rb_available_kw")),
                Profile(grid, ProfileKind::Radiation,
                        or_default(series(root, "radiation_wm2", source), zeros, "radiation_wm2")),
                Profile(grid, ProfileKind::Price, or_default(buy, buy, "buy_price_eur_per_kwh")),
                Profile(grid, ProfileKind::Price,
                        or_default(series(root, "sell_price_eur_per_kwh", source), buy, "sell_price_eur_per_kwh"))};
    const Profile ev(grid, ProfileKind::Power,
                     or_default(series(root, "ev_demand_kw", source), zeros, "ev_demand_kw"));
    return build_problem({std::move(sc)}, config, ev, CaseFlags::for_case(case_number));
}

EmsProblem load_instance(const std::filesystem::path& path) { return parse_instance(read_text_file(path), path.string()); }

} // namespace ems
