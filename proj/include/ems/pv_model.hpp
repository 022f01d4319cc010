#pragma once

#include "ems/params.hpp"
#include "ems/profile.hpp"

namespace ems {

// Active PV output (kW) for a radiation level beta (W/m2):
//   beta^2 / (r_c * r_std) * P_r   for 0 <= beta < r_c
//   beta / r_std * P_r             for r_c <= beta < r_std
//   P_r                            for beta >= r_std
// Throws DomainError for negative or non-finite beta.
double pv_power(double beta_wm2, const PvParams& params);

// Pointwise pv_power over a radiation profile; the result is a Power profile
// on the same grid with every value in [0, rated_kw].
Profile pv_profile(const Profile& radiation, const PvParams& params);

double size_pv_from_penetration(double peak_demand_kw, double penetration);

} // namespace ems
