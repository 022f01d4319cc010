#pragma once

#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ems::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Term {
    int var;
    double coef;
};

struct Variable {
    std::string name;
    double lower = 0.0;
    double upper = kInf;
    double cost = 0.0;
    bool integer = false;
    int branch_priority = 0; // integer columns with higher priority are branched on first
};

// Ranged row: lower <= sum(terms) <= upper.
struct Row {
    std::string name;
    std::vector<Term> terms;
    double lower = -kInf;
    double upper = kInf;
};

// Minimization model with linear rows and bounded, optionally integer,
// columns. This is the solver-neutral description handed to a backend.
class Model {
public:
    int add_variable(std::string name, double lower, double upper, double cost = 0.0, bool integer = false);
    int add_binary(std::string name, double cost = 0.0) { return add_variable(std::move(name), 0.0, 1.0, cost, true); }
    int add_constraint(std::string name, std::vector<Term> terms, Sense sense, double rhs);

    void set_cost(int var, double cost) { vars_.at(static_cast<std::size_t>(var)).cost = cost; }
    void set_bounds(int var, double lower, double upper);
    void set_branch_priority(int var, int priority) { vars_.at(static_cast<std::size_t>(var)).branch_priority = priority; }
    void set_objective_constant(double c) { objective_constant_ = c; }

    int num_vars() const { return static_cast<int>(vars_.size()); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_integers() const;
    const Variable& var(int j) const { return vars_[static_cast<std::size_t>(j)]; }
    const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    std::span<const Variable> vars() const { return vars_; }
    std::span<const Row> rows() const { return rows_; }
    double objective_constant() const { return objective_constant_; }

    double objective_value(std::span<const double> x) const;
    double row_activity(int i, std::span<const double> x) const;
    // Largest bound or row violation of x (integrality not included).
    double max_violation(std::span<const double> x) const;
    double max_integrality_violation(std::span<const double> x) const;

private:
    std::vector<Variable> vars_;
    std::vector<Row> rows_;
    double objective_constant_ = 0.0;
};

// CPLEX LP text format, for inspecting a model with external tools.
void write_lp_format(const Model& model, std::ostream& out);

} // namespace ems::lp
