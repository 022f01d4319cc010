#include "ems/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace ems {

std::vector<Violation> validate_scenario_set(const ScenarioSet& set, bool require_daily) {
    std::vector<Violation> out;
    if (set.empty()) {
        out.push_back({Violation::Kind::Empty, "scenario set is empty"});
        return out;
    }

    double total = 0.0;
    std::set<std::string> ids;
    const TimeGrid& reference = set.front().grid();
    for (const auto& s : set) {
        if (!ids.insert(s.id).second)
            out.push_back({Violation::Kind::DuplicateId, "scenario id '" + s.id + "' is not unique"});
        if (!(s.probability > 0.0 && s.probability <= 1.0))
            out.push_back({Violation::Kind::ProbabilityRange,
                           "scenario '" + s.id + "' has probability " + std::to_string(s.probability) +
                               " outside (0, 1]"});
        total += s.probability;

        const std::pair<const Profile*, ProfileKind> expected[] = {
            {&s.train_demand, ProfileKind::TrainDemand}, {&s.rb_available, ProfileKind::RbAvailable},
            {&s.radiation, ProfileKind::Radiation},      {&s.buy_price, ProfileKind::Price},
            {&s.sell_price, ProfileKind::Price},
        };
        for (const auto& [profile, kind] : expected) {
            if (profile->kind() != kind)
                out.push_back({Violation::Kind::ProfileKind, "scenario '" + s.id + "': expected a " +
                                                                 std::string(to_string(kind)) + " profile, got " +
                                                                 std::string(to_string(profile->kind()))});
            if (!(profile->grid() == s.grid()))
                out.push_back({Violation::Kind::Grid, "scenario '" + s.id + "': " +
                                                          std::string(to_string(profile->kind())) +
                                                          " profile is on a different time grid"});
        }
        if (!s.grid().compatible_with(reference))
            out.push_back({Violation::Kind::Grid, "scenario '" + s.id + "' uses " + std::to_string(s.grid().steps()) +
                                                      " steps of " + std::to_string(s.grid().step_seconds()) +
                                                      " s, expected " + std::to_string(reference.steps()) +
                                                      " steps of " + std::to_string(reference.step_seconds()) + " s"});
        if (require_daily && !s.grid().covers_day())
            out.push_back({Violation::Kind::Horizon,
                           "scenario '" + s.id + "' does not cover exactly 24 h (" +
                               std::to_string(s.grid().horizon_hours()) + " h)"});
    }
    if (std::abs(total - 1.0) > 1e-9) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "scenario probabilities sum to %.12g, expected 1", total);
        out.push_back({Violation::Kind::ProbabilitySum, buf});
    }
    return out;
}

ScenarioSet with_equal_probabilities(ScenarioSet set) {
    const double p = set.empty() ? 0.0 : 1.0 / static_cast<double>(set.size());
    for (auto& s : set)
        s.probability = p;
    return set;
}

} // namespace ems
