#include "ems/lp/dual_simplex.hpp"

#include <algorithm>
#include <cmath>

namespace ems::lp {

const char* to_string(LpStatus status) {
    switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::IterationLimit: return "iteration-limit";
    case LpStatus::TimeLimit: return "time-limit";
    case LpStatus::NumericalError: return "numerical-error";
    }
    return "unknown";
}

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kZeroTol = 1e-12;

struct Candidate {
    int j;
    double alpha;
    double ratio;
};

} // namespace

DualSimplex::DualSimplex(const Model& model) : n_(model.num_vars()), m_(model.num_rows()) {
    objective_constant_ = model.objective_constant();
    const auto total = static_cast<std::size_t>(n_ + m_);
    cost_.assign(total, 0.0);
    lower_.assign(total, 0.0);
    upper_.assign(total, 0.0);
    artificial_lower_.assign(static_cast<std::size_t>(n_), false);
    artificial_upper_.assign(static_cast<std::size_t>(n_), false);

    // Column-wise copy of A. Duplicate terms in a row are summed.
    std::vector<std::vector<std::pair<int, double>>> cols(static_cast<std::size_t>(n_));
    for (int i = 0; i < m_; ++i) {
        for (const auto& t : model.row(i).terms) {
            auto& col = cols[static_cast<std::size_t>(t.var)];
            if (!col.empty() && col.back().first == i)
                col.back().second += t.coef;
            else
                col.emplace_back(i, t.coef);
        }
    }
    col_start_.push_back(0);
    for (int j = 0; j < n_; ++j) {
        for (const auto& [i, a] : cols[static_cast<std::size_t>(j)]) {
            if (a == 0.0)
                continue;
            col_index_.push_back(i);
            col_value_.push_back(a);
        }
        col_start_.push_back(static_cast<int>(col_index_.size()));
        cost_[static_cast<std::size_t>(j)] = model.var(j).cost;
        set_bounds(j, model.var(j).lower, model.var(j).upper);
    }
    // Row-wise copy for computing pivot rows from sparse multipliers.
    row_start_.assign(static_cast<std::size_t>(m_) + 1, 0);
    for (int i : col_index_)
        ++row_start_[static_cast<std::size_t>(i) + 1];
    for (int i = 0; i < m_; ++i)
        row_start_[static_cast<std::size_t>(i) + 1] += row_start_[static_cast<std::size_t>(i)];
    row_index_.resize(col_index_.size());
    row_value_.resize(col_index_.size());
    std::vector<int> fill(row_start_.begin(), row_start_.end() - 1);
    for (int j = 0; j < n_; ++j) {
        for (int k = col_start_[static_cast<std::size_t>(j)]; k < col_start_[static_cast<std::size_t>(j) + 1]; ++k) {
            const auto pos = static_cast<std::size_t>(fill[static_cast<std::size_t>(col_index_[static_cast<std::size_t>(k)])]++);
            row_index_[pos] = j;
            row_value_[pos] = col_value_[static_cast<std::size_t>(k)];
        }
    }
    for (int i = 0; i < m_; ++i) {
        const auto k = static_cast<std::size_t>(n_ + i);
        lower_[k] = model.row(i).lower;
        upper_[k] = model.row(i).upper;
    }
    reset_basis();
}

void DualSimplex::set_bounds(int var, double lower, double upper) {
    const auto j = static_cast<std::size_t>(var);
    artificial_lower_[j] = !std::isfinite(lower);
    artificial_upper_[j] = !std::isfinite(upper);
    lower_[j] = std::isfinite(lower) ? lower : std::min(-artificial_bound, upper - artificial_bound);
    upper_[j] = std::isfinite(upper) ? upper : std::max(artificial_bound, lower + artificial_bound);
    primal_dirty_ = true;
}

void DualSimplex::add_row(const std::vector<Term>& terms, double lower, double upper) {
    std::vector<Term> merged = terms;
    std::sort(merged.begin(), merged.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> row;
    for (const Term& t : merged) {
        if (!row.empty() && row.back().var == t.var)
            row.back().coef += t.coef;
        else
            row.push_back(t);
    }
    std::erase_if(row, [](const Term& t) { return t.coef == 0.0; });

    const int i = m_;
    std::vector<int> start{0};
    std::vector<int> index;
    std::vector<double> value;
    std::size_t next = 0;
    for (int j = 0; j < n_; ++j) {
        for (int k = col_start_[static_cast<std::size_t>(j)]; k < col_start_[static_cast<std::size_t>(j) + 1]; ++k) {
            index.push_back(col_index_[static_cast<std::size_t>(k)]);
            value.push_back(col_value_[static_cast<std::size_t>(k)]);
        }
        if (next < row.size() && row[next].var == j) {
            index.push_back(i);
            value.push_back(row[next].coef);
            ++next;
        }
        start.push_back(static_cast<int>(index.size()));
    }
    col_start_ = std::move(start);
    col_index_ = std::move(index);
    col_value_ = std::move(value);
    for (const Term& t : row) {
        row_index_.push_back(t.var);
        row_value_.push_back(t.coef);
    }
    row_start_.push_back(static_cast<int>(row_index_.size()));

    const int logical = n_ + m_;
    ++m_;
    cost_.push_back(0.0);
    lower_.push_back(lower);
    upper_.push_back(upper);
    state_.push_back(State::Basic);
    x_.push_back(0.0);
    d_.push_back(0.0);
    head_.push_back(logical);
    weight_.push_back(1.0);
    etas_.clear();
    factored_ = false;
    primal_dirty_ = true;
}

bool DualSimplex::at_artificial_bound(int j) const {
    if (j >= n_)
        return false;
    const auto k = static_cast<std::size_t>(j);
    return (state_[k] == State::AtLower && artificial_lower_[k]) || (state_[k] == State::AtUpper && artificial_upper_[k]);
}

void DualSimplex::tableau_row(int r, std::vector<std::pair<int, double>>& out) const {
    out.clear();
    Eigen::VectorXd rho = Eigen::VectorXd::Zero(m_);
    rho[r] = 1.0;
    btran(rho);
    std::vector<double> alpha(static_cast<std::size_t>(n_), 0.0);
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<int> touched;
    for (int i = 0; i < m_; ++i) {
        if (rho[i] == 0.0)
            continue;
        if (state_[static_cast<std::size_t>(n_ + i)] != State::Basic && std::abs(rho[i]) > kZeroTol)
            out.emplace_back(n_ + i, -rho[i]);
        for (int k = row_start_[static_cast<std::size_t>(i)]; k < row_start_[static_cast<std::size_t>(i) + 1]; ++k) {
            const auto j = static_cast<std::size_t>(row_index_[static_cast<std::size_t>(k)]);
            if (!seen[j]) {
                seen[j] = true;
                touched.push_back(static_cast<int>(j));
            }
            alpha[j] += row_value_[static_cast<std::size_t>(k)] * rho[i];
        }
    }
    for (int j : touched) {
        const auto k = static_cast<std::size_t>(j);
        if (state_[k] != State::Basic && std::abs(alpha[k]) > kZeroTol)
            out.emplace_back(j, alpha[k]);
    }
}

void DualSimplex::row_terms(int i, std::vector<Term>& out) const {
    out.clear();
    for (int k = row_start_[static_cast<std::size_t>(i)]; k < row_start_[static_cast<std::size_t>(i) + 1]; ++k)
        out.push_back({row_index_[static_cast<std::size_t>(k)], row_value_[static_cast<std::size_t>(k)]});
}

void DualSimplex::reset_basis() {
    const auto total = static_cast<std::size_t>(n_ + m_);
    head_.resize(static_cast<std::size_t>(m_));
    state_.assign(total, State::AtLower);
    x_.assign(total, 0.0);
    d_.assign(total, 0.0);
    for (int i = 0; i < m_; ++i) {
        head_[static_cast<std::size_t>(i)] = n_ + i;
        state_[static_cast<std::size_t>(n_ + i)] = State::Basic;
    }
    for (int j = 0; j < n_; ++j)
        state_[static_cast<std::size_t>(j)] = cost_[static_cast<std::size_t>(j)] >= 0.0 ? State::AtLower : State::AtUpper;
    weight_.assign(static_cast<std::size_t>(m_), 1.0);
    etas_.clear();
    factored_ = false;
    primal_dirty_ = true;
}

bool DualSimplex::is_boxed(int j) const {
    const auto k = static_cast<std::size_t>(j);
    return std::isfinite(lower_[k]) && std::isfinite(upper_[k]);
}

double DualSimplex::nonbasic_value(int j) const {
    const auto k = static_cast<std::size_t>(j);
    return state_[k] == State::AtUpper ? upper_[k] : lower_[k];
}

void DualSimplex::add_column(int j, double scale, Eigen::VectorXd& v) const {
    if (j < n_) {
        for (int k = col_start_[static_cast<std::size_t>(j)]; k < col_start_[static_cast<std::size_t>(j) + 1]; ++k)
            v[col_index_[static_cast<std::size_t>(k)]] += scale * col_value_[static_cast<std::size_t>(k)];
    } else {
        v[j - n_] -= scale;
    }
}

double DualSimplex::column_dot(int j, const Eigen::VectorXd& v) const {
    if (j >= n_)
        return -v[j - n_];
    double s = 0.0;
    for (int k = col_start_[static_cast<std::size_t>(j)]; k < col_start_[static_cast<std::size_t>(j) + 1]; ++k)
        s += col_value_[static_cast<std::size_t>(k)] * v[col_index_[static_cast<std::size_t>(k)]];
    return s;
}

bool DualSimplex::refactor() {
    etas_.clear();
    if (m_ == 0) {
        factored_ = true;
        return true;
    }
    std::vector<int> start{0};
    std::vector<int> index;
    std::vector<double> value;
    index.reserve(static_cast<std::size_t>(4 * m_));
    value.reserve(static_cast<std::size_t>(4 * m_));
    for (int r = 0; r < m_; ++r) {
        const int j = head_[static_cast<std::size_t>(r)];
        if (j >= n_) {
            index.push_back(j - n_);
            value.push_back(-1.0);
        } else {
            for (int k = col_start_[static_cast<std::size_t>(j)]; k < col_start_[static_cast<std::size_t>(j) + 1]; ++k) {
                index.push_back(col_index_[static_cast<std::size_t>(k)]);
                value.push_back(col_value_[static_cast<std::size_t>(k)]);
            }
        }
        start.push_back(static_cast<int>(index.size()));
    }
    factored_ = lu_.factorize(m_, start, index, value);
    return factored_;
}

void DualSimplex::ftran(Eigen::VectorXd& v) const {
    if (m_ == 0)
        return;
    lu_.ftran(v.data());
    for (const auto& eta : etas_) {
        double& vr = v[eta.row];
        vr /= eta.pivot;
        if (vr == 0.0)
            continue;
        for (std::size_t k = 0; k < eta.index.size(); ++k)
            v[eta.index[k]] -= eta.value[k] * vr;
    }
}

void DualSimplex::btran(Eigen::VectorXd& v) const {
    if (m_ == 0)
        return;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
        double s = v[it->row];
        for (std::size_t k = 0; k < it->index.size(); ++k)
            s -= it->value[k] * v[it->index[k]];
        v[it->row] = s / it->pivot;
    }
    lu_.btran(v.data());
}

void DualSimplex::compute_primal() {
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
    const int total = n_ + m_;
    for (int j = 0; j < total; ++j) {
        if (state_[static_cast<std::size_t>(j)] == State::Basic)
            continue;
        const double v = nonbasic_value(j);
        x_[static_cast<std::size_t>(j)] = v;
        if (v != 0.0)
            add_column(j, -v, rhs);
    }
    ftran(rhs);
    for (int r = 0; r < m_; ++r)
        x_[static_cast<std::size_t>(head_[static_cast<std::size_t>(r)])] = rhs[r];
    primal_dirty_ = false;
}

void DualSimplex::compute_duals() {
    Eigen::VectorXd y(m_);
    for (int r = 0; r < m_; ++r)
        y[r] = cost_[static_cast<std::size_t>(head_[static_cast<std::size_t>(r)])];
    btran(y);
    const int total = n_ + m_;
    for (int j = 0; j < total; ++j) {
        const auto k = static_cast<std::size_t>(j);
        d_[k] = state_[k] == State::Basic ? 0.0 : cost_[k] - column_dot(j, y);
    }
}

bool DualSimplex::restore_dual_feasibility() {
    bool moved = false;
    const int total = n_ + m_;
    for (int j = 0; j < total; ++j) {
        const auto k = static_cast<std::size_t>(j);
        if (state_[k] == State::Basic || lower_[k] == upper_[k])
            continue;
        if (state_[k] == State::AtLower && d_[k] < -kZeroTol) {
            if (!std::isfinite(upper_[k])) {
                if (d_[k] < -1e-7)
                    return false;
                continue;
            }
            state_[k] = State::AtUpper;
            moved = true;
        } else if (state_[k] == State::AtUpper && d_[k] > kZeroTol) {
            if (!std::isfinite(lower_[k])) {
                if (d_[k] > 1e-7)
                    return false;
                continue;
            }
            state_[k] = State::AtLower;
            moved = true;
        }
    }
    if (moved)
        primal_dirty_ = true;
    return true;
}

LpStatus DualSimplex::solve(const LpOptions& options) {
    const int total = n_ + m_;
    bool fresh = false;      // factorization and iterates recomputed since the last pivot
    bool recomputed = false; // primal values recomputed since the last pivot

    const auto rebuild = [&]() -> bool {
        if (!refactor()) {
            reset_basis();
            if (!refactor())
                return false;
        }
        compute_duals();
        if (!restore_dual_feasibility()) {
            reset_basis();
            if (!refactor())
                return false;
            compute_duals();
            restore_dual_feasibility();
        }
        compute_primal();
        fresh = true;
        return true;
    };

    if (!factored_) {
        if (!rebuild())
            return LpStatus::NumericalError;
    } else {
        // Bound changes move nonbasic columns; the duals are unaffected.
        if (!restore_dual_feasibility()) {
            if (!rebuild())
                return LpStatus::NumericalError;
        }
        if (primal_dirty_)
            compute_primal();
    }

    Eigen::VectorXd rho(m_);
    Eigen::VectorXd column(m_);
    Eigen::VectorXd flip_delta(m_);
    Eigen::VectorXd tau(m_);
    std::vector<Candidate> candidates;
    std::vector<std::pair<int, double>> pivot_row;
    std::vector<int> flips;
    std::vector<int> rho_nonzeros;
    std::vector<int> touched;
    std::vector<double> row_alpha(static_cast<std::size_t>(n_), 0.0);
    std::vector<bool> in_row(static_cast<std::size_t>(n_), false);
    long local_iterations = 0;

    while (true) {
        if (static_cast<int>(etas_.size()) >= refactor_interval) {
            if (!rebuild())
                return LpStatus::NumericalError;
        }

        // Leaving row: largest squared bound violation relative to the
        // steepest-edge weight of its row.
        int r = -1;
        double worst = 0.0;
        for (int i = 0; i < m_; ++i) {
            const auto p = static_cast<std::size_t>(head_[static_cast<std::size_t>(i)]);
            const double tol = options.primal_tol * (1.0 + std::abs(x_[p]));
            double infeas = 0.0;
            if (x_[p] < lower_[p] - tol)
                infeas = lower_[p] - x_[p];
            else if (x_[p] > upper_[p] + tol)
                infeas = x_[p] - upper_[p];
            if (infeas == 0.0)
                continue;
            const double score = infeas * infeas / weight_[static_cast<std::size_t>(i)];
            if (score > worst) {
                worst = score;
                r = i;
            }
        }
        if (r < 0) {
            if (!fresh && !recomputed) {
                // Confirm optimality on primal values recomputed from the
                // current factors rather than the incrementally updated ones.
                compute_primal();
                recomputed = true;
                continue;
            }
            for (int j = 0; j < n_; ++j) {
                const auto k = static_cast<std::size_t>(j);
                const double tol = 1e-6 * (1.0 + std::abs(x_[k]));
                if ((artificial_lower_[k] && x_[k] <= lower_[k] + tol) ||
                    (artificial_upper_[k] && x_[k] >= upper_[k] - tol))
                    return LpStatus::Unbounded;
            }
            return LpStatus::Optimal;
        }

        if (++local_iterations > options.max_iterations)
            return LpStatus::IterationLimit;
        if (options.deadline && (local_iterations & 31) == 0 && std::chrono::steady_clock::now() > *options.deadline)
            return LpStatus::TimeLimit;
        ++iterations_;

        const int p = head_[static_cast<std::size_t>(r)];
        const auto pk = static_cast<std::size_t>(p);
        const bool to_lower = x_[pk] < lower_[pk];
        const double target = to_lower ? lower_[pk] : upper_[pk];
        const double sign = to_lower ? 1.0 : -1.0;

        rho.setZero();
        rho[r] = 1.0;
        btran(rho);

        // Pivot row and ratio-test candidates. Sparse multipliers are
        // expanded row-wise, dense ones column by column.
        pivot_row.clear();
        candidates.clear();
        const auto consider = [&](int j, double alpha) {
            const auto k = static_cast<std::size_t>(j);
            if (state_[k] == State::Basic || std::abs(alpha) < kZeroTol)
                return;
            pivot_row.emplace_back(j, alpha);
            if (lower_[k] == upper_[k] || std::abs(alpha) < kPivotTol)
                return;
            const double s = sign * alpha;
            if (state_[k] == State::AtLower && s < 0.0)
                candidates.push_back({j, alpha, std::max(d_[k], 0.0) / std::abs(alpha)});
            else if (state_[k] == State::AtUpper && s > 0.0)
                candidates.push_back({j, alpha, std::max(-d_[k], 0.0) / std::abs(alpha)});
        };
        rho_nonzeros.clear();
        for (int i = 0; i < m_; ++i)
            if (rho[i] != 0.0)
                rho_nonzeros.push_back(i);
        if (rho_nonzeros.size() * 4 < static_cast<std::size_t>(m_)) {
            touched.clear();
            for (int i : rho_nonzeros) {
                const double ri = rho[i];
                for (int k = row_start_[static_cast<std::size_t>(i)]; k < row_start_[static_cast<std::size_t>(i) + 1]; ++k) {
                    const auto j = static_cast<std::size_t>(row_index_[static_cast<std::size_t>(k)]);
                    if (!in_row[j]) {
                        in_row[j] = true;
                        touched.push_back(static_cast<int>(j));
                    }
                    row_alpha[j] += row_value_[static_cast<std::size_t>(k)] * ri;
                }
            }
            for (int j : touched) {
                const auto k = static_cast<std::size_t>(j);
                consider(j, row_alpha[k]);
                row_alpha[k] = 0.0;
                in_row[k] = false;
            }
            for (int i : rho_nonzeros)
                consider(n_ + i, -rho[i]);
        } else {
            for (int j = 0; j < total; ++j)
                if (state_[static_cast<std::size_t>(j)] != State::Basic)
                    consider(j, column_dot(j, rho));
        }

        if (candidates.empty()) {
            if (!fresh) {
                if (!rebuild())
                    return LpStatus::NumericalError;
                continue;
            }
            return LpStatus::Infeasible;
        }

        // Bound-flipping ratio test: pass breakpoints of boxed columns while
        // the dual objective keeps improving.
        std::sort(candidates.begin(), candidates.end(),
                  [](const Candidate& a, const Candidate& b) { return a.ratio < b.ratio; });
        double slope = std::abs(x_[pk] - target);
        std::size_t stop = candidates.size();
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const auto& cand = candidates[c];
            const auto k = static_cast<std::size_t>(cand.j);
            const double range = upper_[k] - lower_[k];
            if (!std::isfinite(range)) {
                stop = c;
                break;
            }
            const double next = slope - std::abs(cand.alpha) * range;
            if (next < 0.0) {
                stop = c;
                break;
            }
            slope = next;
        }
        if (stop == candidates.size() && slope <= options.primal_tol * (1.0 + std::abs(x_[pk]))) {
            // Flipping everything lands exactly on the bound: the last
            // breakpoint enters instead of being flipped.
            stop = candidates.size() - 1;
        }
        if (stop == candidates.size()) {
            // Every breakpoint can be passed: the dual is unbounded.
            if (!fresh) {
                if (!rebuild())
                    return LpStatus::NumericalError;
                continue;
            }
            return LpStatus::Infeasible;
        }

        // Harris-style choice among the remaining breakpoints: the largest
        // pivot within the dual tolerance window.
        double window = kInf;
        for (std::size_t c = stop; c < candidates.size(); ++c) {
            const auto k = static_cast<std::size_t>(candidates[c].j);
            const double dj = state_[k] == State::AtLower ? std::max(d_[k], 0.0) : std::max(-d_[k], 0.0);
            window = std::min(window, (dj + options.dual_tol) / std::abs(candidates[c].alpha));
        }
        std::size_t chosen = stop;
        for (std::size_t c = stop; c < candidates.size() && candidates[c].ratio <= window; ++c)
            if (std::abs(candidates[c].alpha) > std::abs(candidates[chosen].alpha))
                chosen = c;
        const int q = candidates[chosen].j;
        const auto qk = static_cast<std::size_t>(q);
        const double alpha_rq = candidates[chosen].alpha;

        column.setZero();
        add_column(q, 1.0, column);
        ftran(column);
        if (std::abs(column[r] - alpha_rq) > 1e-7 * (1.0 + std::abs(alpha_rq))) {
            if (!rebuild())
                return LpStatus::NumericalError;
            continue;
        }

        // Steepest-edge weights of the new basis.
        {
            const double rho_norm = rho.squaredNorm();
            tau = rho;
            ftran(tau);
            const double pivot = column[r];
            const double wr = std::max(rho_norm, 1e-12);
            for (int i = 0; i < m_; ++i) {
                const double ratio = column[i] / pivot;
                if (i == r || ratio == 0.0)
                    continue;
                auto& w = weight_[static_cast<std::size_t>(i)];
                w = std::max(w + ratio * (ratio * wr - 2.0 * tau[i]), 1e-4);
            }
            weight_[static_cast<std::size_t>(r)] = std::max(wr / (pivot * pivot), 1e-4);
        }

        // Flips.
        flips.clear();
        for (std::size_t c = 0; c < stop; ++c)
            flips.push_back(candidates[c].j);
        if (!flips.empty()) {
            flip_delta.setZero();
            for (int j : flips) {
                const auto k = static_cast<std::size_t>(j);
                const double from = x_[k];
                state_[k] = state_[k] == State::AtLower ? State::AtUpper : State::AtLower;
                x_[k] = nonbasic_value(j);
                add_column(j, x_[k] - from, flip_delta);
            }
            ftran(flip_delta);
            for (int i = 0; i < m_; ++i)
                x_[static_cast<std::size_t>(head_[static_cast<std::size_t>(i)])] -= flip_delta[i];
        }

        // Primal step.
        const double theta_p = (x_[pk] - target) / column[r];
        for (int i = 0; i < m_; ++i)
            x_[static_cast<std::size_t>(head_[static_cast<std::size_t>(i)])] -= theta_p * column[i];
        x_[qk] += theta_p;

        // Dual step.
        const double theta_d = d_[qk] / alpha_rq;
        for (const auto& [j, alpha] : pivot_row)
            d_[static_cast<std::size_t>(j)] -= theta_d * alpha;
        d_[qk] = 0.0;
        d_[pk] = -theta_d;

        // Basis change.
        const double entering_value = x_[qk];
        state_[pk] = to_lower ? State::AtLower : State::AtUpper;
        x_[pk] = target;
        state_[qk] = State::Basic;
        head_[static_cast<std::size_t>(r)] = q;
        x_[qk] = entering_value;

        Eta eta{r, column[r], {}, {}};
        for (int i = 0; i < m_; ++i) {
            if (i == r || std::abs(column[i]) < kZeroTol)
                continue;
            eta.index.push_back(i);
            eta.value.push_back(column[i]);
        }
        etas_.push_back(std::move(eta));
        fresh = false;
        recomputed = false;
    }
}

double DualSimplex::objective() const {
    double obj = objective_constant_;
    for (int j = 0; j < n_; ++j)
        obj += cost_[static_cast<std::size_t>(j)] * x_[static_cast<std::size_t>(j)];
    return obj;
}

std::vector<double> DualSimplex::solution() const {
    return {x_.begin(), x_.begin() + n_};
}

} // namespace ems::lp
