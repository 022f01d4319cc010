#include "ems/pv_model.hpp"

#include <cmath>
#include <string>

#include "ems/error.hpp"

namespace ems {

double pv_power(double beta, const PvParams& params) {
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw DomainError("solar radiation must be finite and non-negative, got " + std::to_string(beta));
    if (beta < params.r_c_wm2)
        return beta * beta / (params.r_c_wm2 * params.r_std_wm2) * params.rated_kw;
    if (beta < params.r_std_wm2)
        return beta / params.r_std_wm2 * params.rated_kw;
    return params.rated_kw;
}

Profile pv_profile(const Profile& radiation, const PvParams& params) {
    params.validate();
    std::vector<double> out(static_cast<std::size_t>(radiation.size()));
    for (int t = 0; t < radiation.size(); ++t) {
        try {
            out[static_cast<std::size_t>(t)] = pv_power(radiation[t], params);
        } catch (const DomainError& e) {
            throw DomainError("step " + std::to_string(t) + ": " + e.what());
        }
    }
    return Profile(radiation.grid(), ProfileKind::Power, std::move(out));
}

double size_pv_from_penetration(double peak_demand_kw, double penetration) {
    if (!(peak_demand_kw > 0.0))
        throw DomainError("peak demand must be positive");
    if (!(penetration >= 0.0 && penetration <= 1.0))
        throw DomainError("penetration must be in [0, 1]");
    return penetration * peak_demand_kw;
}

} // namespace ems
