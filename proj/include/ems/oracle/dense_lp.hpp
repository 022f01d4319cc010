#pragma once

#include <limits>
#include <vector>

namespace ems::oracle {

// Small dense LP used for verification only:
//   min c'x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  lower <= x <= upper.
// Lower bounds must be finite; upper bounds may be infinite.
struct DenseLp {
    std::vector<double> cost;
    std::vector<std::vector<double>> a_ub;
    std::vector<double> b_ub;
    std::vector<std::vector<double>> a_eq;
    std::vector<double> b_eq;
    std::vector<double> lower;
    std::vector<double> upper;
};

struct DenseLpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
    double objective = std::numeric_limits<double>::infinity();
    std::vector<double> x;
};

// Two-phase primal tableau simplex with Bland's rule. Exact in the sense of
// a finite pivoting method; meant for problems with a few dozen columns.
DenseLpResult solve_dense_lp(const DenseLp& lp);

} // namespace ems::oracle
