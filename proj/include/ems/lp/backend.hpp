#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ems/lp/model.hpp"

namespace ems::lp {

enum class MipStatus {
    Optimal,     // proven within the gap tolerance
    FeasibleGap, // stopped by a limit with an incumbent
    Infeasible,
    Unbounded,
    Error, // limit without incumbent or numerical breakdown
};

const char* to_string(MipStatus status);

struct MipOptions {
    double gap_tol = 1e-6;        // relative: (incumbent - bound) / max(1, |incumbent|)
    double time_limit_s = 60.0;
    double integrality_tol = 1e-6;
    long node_limit = 10'000'000;
    // Feasibility tolerance used when checking candidate points.
    double feasibility_tol = 1e-7;
    // Rounds of Gomory mixed-integer cuts added at the root node.
    int cut_rounds = 3;
    // Solve groups of columns that share no row as separate models.
    bool decompose = true;
    // Optional problem-specific repair: receives the LP point of a node with
    // fractional integers and may rewrite it into an integer-feasible point.
    // Returning true proposes the point; it is verified against the model
    // before being accepted as an incumbent.
    std::function<bool(std::vector<double>& x)> repair;
};

struct MipResult {
    MipStatus status = MipStatus::Error;
    double objective = kInf;
    double best_bound = -kInf;
    double gap = kInf;
    std::vector<double> x;
    long nodes = 0;
    long lp_iterations = 0;
    double seconds = 0.0;
    std::string message;
};

// A MILP engine. Instances are not shared between threads; create one per
// worker.
class SolverBackend {
public:
    virtual ~SolverBackend() = default;
    virtual std::string_view name() const = 0;
    virtual MipResult solve(const Model& model, const MipOptions& options) = 0;
};

// Known names: "bnb" (branch-and-bound over the dual simplex, the default).
// Throws std::invalid_argument for unknown names.
std::unique_ptr<SolverBackend> make_backend(std::string_view name = "bnb");
std::vector<std::string> backend_names();

} // namespace ems::lp
