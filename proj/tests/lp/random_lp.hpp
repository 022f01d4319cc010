#pragma once

#include <random>

#include "ems/lp/model.hpp"
#include "ems/oracle/dense_lp.hpp"

namespace ems::testing {

// Random feasible-or-not boxed LP with mixed row senses, returned both as a
// Model and as the equivalent DenseLp.
struct RandomLp {
    lp::Model model;
    oracle::DenseLp dense;
};

inline RandomLp make_random_lp(std::mt19937_64& rng, int n, int m, int n_int = 0) {
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RandomLp out;
    auto& d = out.dense;
    for (int j = 0; j < n; ++j) {
        const bool is_int = j < n_int;
        const double lo = is_int ? 0.0 : std::round(coef(rng));
        const double hi = is_int ? 1.0 : lo + 1.0 + 9.0 * unit(rng);
        const double c = std::round(coef(rng) * 4.0) / 4.0;
        out.model.add_variable("x" + std::to_string(j), lo, hi, c, is_int);
        d.cost.push_back(c);
        d.lower.push_back(lo);
        d.upper.push_back(hi);
    }
    for (int i = 0; i < m; ++i) {
        std::vector<lp::Term> terms;
        std::vector<double> row(static_cast<std::size_t>(n), 0.0);
        for (int j = 0; j < n; ++j) {
            if (unit(rng) < 0.5)
                continue;
            const double a = std::round(coef(rng) * 2.0) / 2.0;
            if (a == 0.0)
                continue;
            terms.push_back({j, a});
            row[static_cast<std::size_t>(j)] = a;
        }
        const double rhs = std::round(coef(rng) * 6.0);
        const double kind = unit(rng);
        if (kind < 0.45) {
            out.model.add_constraint("r" + std::to_string(i), terms, lp::Sense::LessEqual, rhs);
            d.a_ub.push_back(row);
            d.b_ub.push_back(rhs);
        } else if (kind < 0.9) {
            out.model.add_constraint("r" + std::to_string(i), terms, lp::Sense::GreaterEqual, rhs);
            for (auto& v : row)
                v = -v;
            d.a_ub.push_back(row);
            d.b_ub.push_back(-rhs);
        } else {
            out.model.add_constraint("r" + std::to_string(i), terms, lp::Sense::Equal, rhs);
            d.a_eq.push_back(row);
            d.b_eq.push_back(rhs);
        }
    }
    return out;
}

} // namespace ems::testing
