#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ems/time_grid.hpp"

namespace ems {

enum class ProfileKind {
    TrainDemand, // kW
    RbAvailable, // kW
    Radiation,   // W/m2
    Price,       // EUR/kWh, may be negative
    Power,       // kW, generic derived series (PV output, EV demand)
};

std::string_view to_string(ProfileKind kind);
std::string_view internal_unit(ProfileKind kind);
bool is_non_negative(ProfileKind kind);
// Power-like kinds are averaged when downsampled; prices are sampled.
bool is_power_like(ProfileKind kind);

// A time series on a grid. Immutable after construction; the constructor
// enforces length, finiteness and sign rules for the kind.
class Profile {
public:
    Profile(TimeGrid grid, ProfileKind kind, std::vector<double> values);

    static Profile constant(TimeGrid grid, ProfileKind kind, double value);

    const TimeGrid& grid() const { return grid_; }
    ProfileKind kind() const { return kind_; }
    std::span<const double> values() const { return values_; }
    double operator[](int step) const { return values_[static_cast<std::size_t>(step)]; }
    int size() const { return static_cast<int>(values_.size()); }

    double max() const;
    double sum() const;

    bool operator==(const Profile&) const = default;

private:
    TimeGrid grid_;
    ProfileKind kind_;
    std::vector<double> values_;
};

// Canonical text form ("timestamp,value" CSV with round-trip precision).
std::string serialize(const Profile& profile);

} // namespace ems
