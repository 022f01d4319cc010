#include "ems/oracle/dense_lp.hpp"

#include <cmath>
#include <stdexcept>

namespace ems::oracle {

namespace {

constexpr double kEps = 1e-10;

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows + 1, std::vector<double>(cols + 1, 0.0)) {}

    double& at(std::size_t i, std::size_t j) { return t_[i][j]; }
    double& rhs(std::size_t i) { return t_[i][n_]; }
    std::vector<double>& objective_row() { return t_[m_]; }

    void pivot(std::size_t row, std::size_t col) {
        const double p = t_[row][col];
        for (auto& v : t_[row])
            v /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == row)
                continue;
            const double f = t_[i][col];
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j <= n_; ++j)
                t_[i][j] -= f * t_[row][j];
            t_[i][col] = 0.0;
        }
    }

    // Bland's rule. Returns false when the LP is unbounded.
    bool optimize(std::vector<std::size_t>& basis, const std::vector<bool>& allowed, std::vector<bool>& active_row) {
        while (true) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (allowed[j] && t_[m_][j] < -kEps) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_)
                return true;
            std::size_t leave = m_;
            double best = 0.0;
            for (std::size_t i = 0; i < m_; ++i) {
                if (!active_row[i] || t_[i][enter] <= kEps)
                    continue;
                const double ratio = t_[i][n_] / t_[i][enter];
                if (leave == m_ || ratio < best - kEps || (std::abs(ratio - best) <= kEps && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_)
                return false;
            pivot(leave, enter);
            basis[leave] = enter;
        }
    }

private:
    std::size_t m_;
    std::size_t n_;
    std::vector<std::vector<double>> t_;
};

} // namespace

DenseLpResult solve_dense_lp(const DenseLp& lp) {
    const std::size_t n = lp.cost.size();
    if (lp.lower.size() != n || lp.upper.size() != n)
        throw std::invalid_argument("dense LP bound vectors do not match the cost vector");
    for (double l : lp.lower)
        if (!std::isfinite(l))
            throw std::invalid_argument("dense LP needs finite lower bounds");

    enum class Kind { Le, Ge, Eq };
    struct RowSpec {
        std::vector<double> a;
        double b;
        Kind kind;
    };
    std::vector<RowSpec> rows;
    const auto shifted_rhs = [&](const std::vector<double>& a, double b) {
        double s = b;
        for (std::size_t j = 0; j < n; ++j)
            s -= a[j] * lp.lower[j];
        return s;
    };
    for (std::size_t i = 0; i < lp.a_ub.size(); ++i)
        rows.push_back({lp.a_ub[i], shifted_rhs(lp.a_ub[i], lp.b_ub[i]), Kind::Le});
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(lp.upper[j]))
            continue;
        std::vector<double> a(n, 0.0);
        a[j] = 1.0;
        rows.push_back({a, lp.upper[j] - lp.lower[j], Kind::Le});
    }
    for (std::size_t i = 0; i < lp.a_eq.size(); ++i)
        rows.push_back({lp.a_eq[i], shifted_rhs(lp.a_eq[i], lp.b_eq[i]), Kind::Eq});
    for (auto& r : rows) {
        if (r.b < 0.0) {
            for (auto& v : r.a)
                v = -v;
            r.b = -r.b;
            if (r.kind == Kind::Le)
                r.kind = Kind::Ge;
            else if (r.kind == Kind::Ge)
                r.kind = Kind::Le;
        }
    }

    const std::size_t m = rows.size();
    std::size_t n_slack = 0, n_art = 0;
    for (const auto& r : rows) {
        if (r.kind != Kind::Eq)
            ++n_slack;
        if (r.kind != Kind::Le)
            ++n_art;
    }
    const std::size_t cols = n + n_slack + n_art;
    Tableau tab(m, cols);
    std::vector<std::size_t> basis(m);
    std::vector<bool> is_art(cols, false);
    std::size_t slack = n, art = n + n_slack;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            tab.at(i, j) = rows[i].a[j];
        tab.rhs(i) = rows[i].b;
        if (rows[i].kind == Kind::Le) {
            tab.at(i, slack) = 1.0;
            basis[i] = slack++;
        } else {
            if (rows[i].kind == Kind::Ge)
                tab.at(i, slack++) = -1.0;
            tab.at(i, art) = 1.0;
            is_art[art] = true;
            basis[i] = art++;
        }
    }

    std::vector<bool> active(m, true);
    std::vector<bool> allowed(cols, true);
    auto& obj = tab.objective_row();

    // Phase 1: minimize the sum of artificials.
    if (n_art > 0) {
        for (std::size_t j = 0; j <= cols; ++j)
            obj[j] = 0.0;
        for (std::size_t j = 0; j < cols; ++j)
            if (is_art[j])
                obj[j] = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!is_art[basis[i]])
                continue;
            for (std::size_t j = 0; j <= cols; ++j)
                obj[j] -= tab.at(i, j);
        }
        tab.optimize(basis, allowed, active);
        double infeasibility = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            if (is_art[basis[i]])
                infeasibility += tab.rhs(i);
        double scale = 1.0;
        for (const auto& r : rows)
            scale = std::max(scale, std::abs(r.b));
        if (infeasibility > 1e-9 * scale)
            return {DenseLpResult::Status::Infeasible, std::numeric_limits<double>::infinity(), {}};
        // Drive remaining zero-level artificials out of the basis.
        for (std::size_t i = 0; i < m; ++i) {
            if (!is_art[basis[i]])
                continue;
            std::size_t pick = cols;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!is_art[j] && std::abs(tab.at(i, j)) > 1e-9) {
                    pick = j;
                    break;
                }
            }
            if (pick == cols) {
                active[i] = false; // redundant row
            } else {
                tab.pivot(i, pick);
                basis[i] = pick;
            }
        }
        for (std::size_t j = 0; j < cols; ++j)
            if (is_art[j])
                allowed[j] = false;
    }

    // Phase 2.
    for (std::size_t j = 0; j <= cols; ++j)
        obj[j] = j < n ? lp.cost[j] : 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (!active[i] || basis[i] >= n)
            continue;
        const double cb = lp.cost[basis[i]];
        if (cb == 0.0)
            continue;
        for (std::size_t j = 0; j <= cols; ++j)
            obj[j] -= cb * tab.at(i, j);
    }
    if (!tab.optimize(basis, allowed, active))
        return {DenseLpResult::Status::Unbounded, -std::numeric_limits<double>::infinity(), {}};

    DenseLpResult out;
    out.status = DenseLpResult::Status::Optimal;
    out.x = lp.lower;
    for (std::size_t i = 0; i < m; ++i)
        if (active[i] && basis[i] < n)
            out.x[basis[i]] += tab.rhs(i);
    out.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        out.objective += lp.cost[j] * out.x[j];
    return out;
}

} // namespace ems::oracle
