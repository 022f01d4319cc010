#include "ems/lp/model.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ems::lp {

int Model::add_variable(std::string name, double lower, double upper, double cost, bool integer) {
    if (std::isnan(lower) || std::isnan(upper) || lower > upper)
        throw std::invalid_argument("variable '" + name + "' has an empty domain");
    vars_.push_back({std::move(name), lower, upper, cost, integer});
    return static_cast<int>(vars_.size()) - 1;
}

int Model::add_constraint(std::string name, std::vector<Term> terms, Sense sense, double rhs) {
    for (const auto& t : terms)
        if (t.var < 0 || t.var >= num_vars())
            throw std::out_of_range("constraint '" + name + "' references an unknown variable");
    Row row{std::move(name), std::move(terms), -kInf, kInf};
    switch (sense) {
    case Sense::LessEqual: row.upper = rhs; break;
    case Sense::GreaterEqual: row.lower = rhs; break;
    case Sense::Equal: row.lower = row.upper = rhs; break;
    }
    rows_.push_back(std::move(row));
    return static_cast<int>(rows_.size()) - 1;
}

void Model::set_bounds(int var, double lower, double upper) {
    auto& v = vars_.at(static_cast<std::size_t>(var));
    v.lower = lower;
    v.upper = upper;
}

int Model::num_integers() const {
    return static_cast<int>(std::count_if(vars_.begin(), vars_.end(), [](const Variable& v) { return v.integer; }));
}

double Model::objective_value(std::span<const double> x) const {
    double obj = objective_constant_;
    for (std::size_t j = 0; j < vars_.size(); ++j)
        obj += vars_[j].cost * x[j];
    return obj;
}

double Model::row_activity(int i, std::span<const double> x) const {
    double a = 0.0;
    for (const auto& t : rows_[static_cast<std::size_t>(i)].terms)
        a += t.coef * x[static_cast<std::size_t>(t.var)];
    return a;
}

double Model::max_violation(std::span<const double> x) const {
    double worst = 0.0;
    for (std::size_t j = 0; j < vars_.size(); ++j) {
        worst = std::max(worst, vars_[j].lower - x[j]);
        worst = std::max(worst, x[j] - vars_[j].upper);
    }
    for (int i = 0; i < num_rows(); ++i) {
        const double a = row_activity(i, x);
        worst = std::max(worst, rows_[static_cast<std::size_t>(i)].lower - a);
        worst = std::max(worst, a - rows_[static_cast<std::size_t>(i)].upper);
    }
    return worst;
}

double Model::max_integrality_violation(std::span<const double> x) const {
    double worst = 0.0;
    for (std::size_t j = 0; j < vars_.size(); ++j)
        if (vars_[j].integer)
            worst = std::max(worst, std::abs(x[j] - std::round(x[j])));
    return worst;
}

namespace {

void write_terms(std::ostream& out, const std::vector<Term>& terms, const Model& model) {
    bool first = true;
    int on_line = 0;
    for (const auto& t : terms) {
        if (t.coef == 0.0)
            continue;
        out << (t.coef < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        const double mag = std::abs(t.coef);
        if (mag != 1.0)
            out << mag << ' ';
        out << model.var(t.var).name;
        first = false;
        if (++on_line == 6) {
            out << "\n   ";
            on_line = 0;
        }
    }
    if (first)
        out << "0 " << (model.num_vars() > 0 ? model.var(0).name : "x");
}

} // namespace

void write_lp_format(const Model& model, std::ostream& out) {
    const auto old_precision = out.precision(17);
    out << "\\ objective constant " << model.objective_constant() << "\n";
    out << "Minimize\n obj: ";
    std::vector<Term> obj;
    for (int j = 0; j < model.num_vars(); ++j)
        if (model.var(j).cost != 0.0)
            obj.push_back({j, model.var(j).cost});
    write_terms(out, obj, model);
    out << "\nSubject To\n";
    for (const auto& row : model.rows()) {
        const auto emit = [&](const std::string& suffix, const char* op, double rhs) {
            out << ' ' << row.name << suffix << ": ";
            write_terms(out, row.terms, model);
            out << ' ' << op << ' ' << rhs << '\n';
        };
        if (row.lower == row.upper)
            emit("", "=", row.upper);
        else if (std::isfinite(row.lower) && std::isfinite(row.upper)) {
            emit("_lo", ">=", row.lower);
            emit("_hi", "<=", row.upper);
        } else if (std::isfinite(row.upper))
            emit("", "<=", row.upper);
        else if (std::isfinite(row.lower))
            emit("", ">=", row.lower);
    }
    out << "Bounds\n";
    for (const auto& v : model.vars()) {
        if (v.lower == v.upper)
            out << ' ' << v.name << " = " << v.lower << '\n';
        else if (!std::isfinite(v.lower) && !std::isfinite(v.upper))
            out << ' ' << v.name << " free\n";
        else {
            out << ' ';
            if (std::isfinite(v.lower))
                out << v.lower;
            else
                out << "-inf";
            out << " <= " << v.name << " <= ";
            if (std::isfinite(v.upper))
                out << v.upper;
            else
                out << "+inf";
            out << '\n';
        }
    }
    bool any_int = false;
    for (const auto& v : model.vars()) {
        if (!v.integer)
            continue;
        if (!any_int)
            out << "General\n";
        any_int = true;
        out << ' ' << v.name << '\n';
    }
    out << "End\n";
    out.precision(old_precision);
}

} // namespace ems::lp
