#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ems/lp/basis_lu.hpp"
#include "ems/lp/model.hpp"

namespace ems::lp {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit, TimeLimit, NumericalError };

const char* to_string(LpStatus status);

struct LpOptions {
    double primal_tol = 1e-9;
    double dual_tol = 1e-9;
    long max_iterations = 5'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Bounded revised dual simplex on the rows and columns of a Model.
//
// Every row i gets a logical column -e_i bounded by the row range, so the
// system is [A | -I] x = 0. Infinite structural bounds are replaced by large
// artificial ones, which keeps every basis dual feasible once each nonbasic
// column sits at the bound matching its reduced-cost sign. That property is
// what branch-and-bound relies on: after any change of structural bounds the
// current basis is a valid warm start.
//
// The basis is factored with BasisLu; updates are kept as an eta file
// and the factorization is rebuilt every `refactor_interval` pivots.
class DualSimplex {
public:
    explicit DualSimplex(const Model& model);

    void set_bounds(int var, double lower, double upper);
    double lower(int var) const { return lower_[static_cast<std::size_t>(var)]; }
    double upper(int var) const { return upper_[static_cast<std::size_t>(var)]; }

    LpStatus solve(const LpOptions& options = {});

    // Valid after Optimal.
    double objective() const;
    std::vector<double> solution() const;
    double value(int var) const { return x_[static_cast<std::size_t>(var)]; }
    double reduced_cost(int var) const { return d_[static_cast<std::size_t>(var)]; }

    long iterations() const { return iterations_; }
    int num_vars() const { return n_; }
    int num_rows() const { return m_; }

    // Drops the current basis in favour of the all-logical one.
    void reset_basis();

    // Appends the row lower <= sum(terms) <= upper. Its logical column enters
    // the basis, so the current basis stays dual feasible.
    void add_row(const std::vector<Term>& terms, double lower, double upper);

    // Column index n + i stands for the logical of row i, whose value is the
    // row activity. The accessors below take either kind of index.
    bool is_basic(int j) const { return state_[static_cast<std::size_t>(j)] == State::Basic; }
    bool at_upper(int j) const { return state_[static_cast<std::size_t>(j)] == State::AtUpper; }
    // True when a structural column sits on a bound that stands in for an
    // infinite one.
    bool at_artificial_bound(int j) const;
    double bound_lower(int j) const { return lower_[static_cast<std::size_t>(j)]; }
    double bound_upper(int j) const { return upper_[static_cast<std::size_t>(j)]; }
    int basic_column(int r) const { return head_[static_cast<std::size_t>(r)]; }
    // Row r of the tableau after Optimal: x_head(r) = value - sum alpha_j (x_j - value_j)
    // over nonbasic columns j, returned as (j, alpha_j) pairs.
    void tableau_row(int r, std::vector<std::pair<int, double>>& out) const;
    // Structural coefficients of row i.
    void row_terms(int i, std::vector<Term>& out) const;

private:
    enum class State : unsigned char { Basic, AtLower, AtUpper };

    struct Eta {
        int row;
        double pivot;
        std::vector<int> index;
        std::vector<double> value;
    };

    bool refactor();
    void compute_primal();
    void compute_duals();
    // Moves nonbasic columns to the bound their reduced cost asks for.
    // Returns false when a column would need an infinite bound.
    bool restore_dual_feasibility();
    void ftran(Eigen::VectorXd& v) const;
    void btran(Eigen::VectorXd& v) const;
    void add_column(int j, double scale, Eigen::VectorXd& v) const;
    double column_dot(int j, const Eigen::VectorXd& v) const;
    double nonbasic_value(int j) const;
    bool is_boxed(int j) const;

    int n_ = 0;
    int m_ = 0;
    double objective_constant_ = 0.0;
    std::vector<int> col_start_;
    std::vector<int> row_start_;
    std::vector<int> row_index_;
    std::vector<double> row_value_;
    std::vector<int> col_index_;
    std::vector<double> col_value_;
    std::vector<double> cost_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::vector<bool> artificial_lower_;
    std::vector<bool> artificial_upper_;

    std::vector<int> head_;
    std::vector<double> weight_; // dual steepest-edge weight per basis row
    std::vector<State> state_;
    std::vector<double> x_;
    std::vector<double> d_;

    BasisLu lu_;
    std::vector<Eta> etas_;
    bool factored_ = false;
    bool primal_dirty_ = true;
    long iterations_ = 0;

    static constexpr int refactor_interval = 80;
    static constexpr double artificial_bound = 1e9;
};

} // namespace ems::lp
