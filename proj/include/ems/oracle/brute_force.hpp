#pragma once

#include "ems/ems_problem.hpp"

namespace ems::oracle {

struct BruteForceResult {
    bool feasible = false;
    double objective_eur = 0.0; // probability-weighted cost of the best assignment
    long assignments = 0;       // binary assignments enumerated
    long feasible_assignments = 0;
};

constexpr int kBruteForceMaxSteps = 4;

// Exact optimum of a single-scenario problem with at most
// kBruteForceMaxSteps steps: enumerates every assignment of the storage and
// grid direction binaries and solves the remaining LP with the dense tableau
// solver. The LP is assembled here from the problem data, independently of
// the MILP emitter. Throws DomainError for larger instances.
BruteForceResult brute_force(const EmsProblem& problem);

} // namespace ems::oracle
