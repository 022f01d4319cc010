#include "ems/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "ems/error.hpp"

namespace ems {

std::string_view to_string(ProfileKind kind) {
    switch (kind) {
    case ProfileKind::TrainDemand: return "train_demand";
    case ProfileKind::RbAvailable: return "rb_available";
    case ProfileKind::Radiation: return "radiation";
    case ProfileKind::Price: return "price";
    case ProfileKind::Power: return "power";
    }
    return "unknown";
}

std::string_view internal_unit(ProfileKind kind) {
    switch (kind) {
    case ProfileKind::Radiation: return "W/m2";
    case ProfileKind::Price: return "EUR/kWh";
    default: return "kW";
    }
}

bool is_non_negative(ProfileKind kind) { return kind != ProfileKind::Price; }

bool is_power_like(ProfileKind kind) { return kind != ProfileKind::Price; }

Profile::Profile(TimeGrid grid, ProfileKind kind, std::vector<double> values)
    : grid_(grid), kind_(kind), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.steps())
        throw ValidationError(std::string(to_string(kind)) + " profile has " + std::to_string(values_.size()) +
                              " values for a grid of " + std::to_string(grid_.steps()) + " steps");
    for (std::size_t t = 0; t < values_.size(); ++t) {
        if (!std::isfinite(values_[t]))
            throw ValidationError(std::string(to_string(kind)) + " profile: non-finite value at step " +
                                  std::to_string(t));
        if (is_non_negative(kind) && values_[t] < 0.0)
            throw ValidationError(std::string(to_string(kind)) + " profile: negative value " +
                                  std::to_string(values_[t]) + " at step " + std::to_string(t));
    }
}

Profile Profile::constant(TimeGrid grid, ProfileKind kind, double value) {
    return Profile(grid, kind, std::vector<double>(static_cast<std::size_t>(grid.steps()), value));
}

double Profile::max() const { return *std::max_element(values_.begin(), values_.end()); }

double Profile::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

std::string serialize(const Profile& profile) {
    std::string out = "timestamp,value\n";
    char buf[64];
    for (int t = 0; t < profile.size(); ++t) {
        std::snprintf(buf, sizeof buf, ",%.17g\n", profile[t]);
        out += format_timestamp(profile.grid().time_at(t));
        out += buf;
    }
    return out;
}

} // namespace ems
