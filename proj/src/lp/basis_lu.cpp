#include "ems/lp/basis_lu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ems::lp {

namespace {

constexpr double kThreshold = 0.1;
constexpr double kSingularTol = 1e-11;

} // namespace

bool BasisLu::factorize(int m, const std::vector<int>& start, const std::vector<int>& index,
                        const std::vector<double>& value) {
    m_ = m;
    const auto n = static_cast<std::size_t>(m);
    q_.resize(n);
    std::iota(q_.begin(), q_.end(), 0);
    std::stable_sort(q_.begin(), q_.end(), [&](int a, int b) {
        return start[static_cast<std::size_t>(a) + 1] - start[static_cast<std::size_t>(a)] <
               start[static_cast<std::size_t>(b) + 1] - start[static_cast<std::size_t>(b)];
    });
    std::vector<int> row_count(n, 0);
    for (std::size_t k = 0; k < static_cast<std::size_t>(start[n]); ++k)
        ++row_count[static_cast<std::size_t>(index[k])];

    std::vector<int> pinv(n, -1); // row -> pivot step
    prow_.assign(n, -1);
    l_start_.assign(1, 0);
    l_index_.clear();
    l_value_.clear();
    u_start_.assign(1, 0);
    u_index_.clear();
    u_value_.clear();
    u_diag_.assign(n, 0.0);

    std::vector<double> x(n, 0.0);
    std::vector<int> mark(n, -1);
    std::vector<int> reach;      // rows reached, in finishing order
    std::vector<int> stack;      // DFS rows
    std::vector<int> next_child; // DFS resume position per stack level

    for (int k = 0; k < m; ++k) {
        const auto col = static_cast<std::size_t>(q_[static_cast<std::size_t>(k)]);
        reach.clear();
        double col_max = 0.0;
        for (int p = start[col]; p < start[col + 1]; ++p) {
            const int i0 = index[static_cast<std::size_t>(p)];
            x[static_cast<std::size_t>(i0)] += value[static_cast<std::size_t>(p)];
            col_max = std::max(col_max, std::abs(value[static_cast<std::size_t>(p)]));
            if (mark[static_cast<std::size_t>(i0)] == k)
                continue;
            // Depth-first search through the columns of L already computed.
            mark[static_cast<std::size_t>(i0)] = k;
            stack.assign(1, i0);
            next_child.assign(1, 0);
            while (!stack.empty()) {
                const int i = stack.back();
                const int j = pinv[static_cast<std::size_t>(i)];
                bool descended = false;
                if (j >= 0) {
                    int& pos = next_child.back();
                    const int end = l_start_[static_cast<std::size_t>(j) + 1];
                    for (int c = l_start_[static_cast<std::size_t>(j)] + pos; c < end; ++c) {
                        ++pos;
                        const int r = l_index_[static_cast<std::size_t>(c)];
                        if (mark[static_cast<std::size_t>(r)] != k) {
                            mark[static_cast<std::size_t>(r)] = k;
                            stack.push_back(r);
                            next_child.push_back(0);
                            descended = true;
                            break;
                        }
                    }
                }
                if (!descended) {
                    reach.push_back(i);
                    stack.pop_back();
                    next_child.pop_back();
                }
            }
        }

        // Eliminate with the pivotal rows in topological order.
        for (auto it = reach.rbegin(); it != reach.rend(); ++it) {
            const int i = *it;
            const int j = pinv[static_cast<std::size_t>(i)];
            if (j < 0)
                continue;
            const double xi = x[static_cast<std::size_t>(i)];
            if (xi == 0.0)
                continue;
            for (int c = l_start_[static_cast<std::size_t>(j)]; c < l_start_[static_cast<std::size_t>(j) + 1]; ++c)
                x[static_cast<std::size_t>(l_index_[static_cast<std::size_t>(c)])] -=
                    l_value_[static_cast<std::size_t>(c)] * xi;
        }

        double best = 0.0;
        for (int i : reach)
            if (pinv[static_cast<std::size_t>(i)] < 0)
                best = std::max(best, std::abs(x[static_cast<std::size_t>(i)]));
        if (best <= kSingularTol * std::max(1.0, col_max)) {
            for (int i : reach)
                x[static_cast<std::size_t>(i)] = 0.0;
            return false;
        }
        int pivot = -1;
        for (int i : reach) {
            const auto r = static_cast<std::size_t>(i);
            if (pinv[r] >= 0 || std::abs(x[r]) < kThreshold * best)
                continue;
            if (pivot < 0 || row_count[r] < row_count[static_cast<std::size_t>(pivot)] ||
                (row_count[r] == row_count[static_cast<std::size_t>(pivot)] &&
                 std::abs(x[r]) > std::abs(x[static_cast<std::size_t>(pivot)])))
                pivot = i;
        }

        const double diag = x[static_cast<std::size_t>(pivot)];
        u_diag_[static_cast<std::size_t>(k)] = diag;
        for (int i : reach) {
            const auto r = static_cast<std::size_t>(i);
            const double xi = x[r];
            x[r] = 0.0;
            if (i == pivot || xi == 0.0)
                continue;
            if (pinv[r] >= 0) {
                u_index_.push_back(pinv[r]);
                u_value_.push_back(xi);
            } else {
                l_index_.push_back(i); // renumbered to pivot steps below
                l_value_.push_back(xi / diag);
            }
        }
        pinv[static_cast<std::size_t>(pivot)] = k;
        prow_[static_cast<std::size_t>(k)] = pivot;
        l_start_.push_back(static_cast<int>(l_index_.size()));
        u_start_.push_back(static_cast<int>(u_index_.size()));
    }
    for (int& i : l_index_)
        i = pinv[static_cast<std::size_t>(i)];
    transpose(l_start_, l_index_, l_value_, lt_start_, lt_index_, lt_value_);
    transpose(u_start_, u_index_, u_value_, ut_start_, ut_index_, ut_value_);
    work_.assign(n, 0.0);
    return true;
}

void BasisLu::transpose(const std::vector<int>& start, const std::vector<int>& index, const std::vector<double>& value,
                        std::vector<int>& t_start, std::vector<int>& t_index, std::vector<double>& t_value) const {
    const auto n = static_cast<std::size_t>(m_);
    t_start.assign(n + 1, 0);
    for (int i : index)
        ++t_start[static_cast<std::size_t>(i) + 1];
    for (std::size_t k = 0; k < n; ++k)
        t_start[k + 1] += t_start[k];
    t_index.resize(index.size());
    t_value.resize(value.size());
    std::vector<int> fill(t_start.begin(), t_start.end() - 1);
    for (std::size_t k = 0; k < n; ++k) {
        for (int c = start[k]; c < start[k + 1]; ++c) {
            const auto pos = static_cast<std::size_t>(fill[static_cast<std::size_t>(index[static_cast<std::size_t>(c)])]++);
            t_index[pos] = static_cast<int>(k);
            t_value[pos] = value[static_cast<std::size_t>(c)];
        }
    }
}

void BasisLu::ftran(double* v) const {
    const int m = m_;
    double* y = work_.data();
    for (int k = 0; k < m; ++k)
        y[k] = v[prow_[static_cast<std::size_t>(k)]];
    for (int k = 0; k < m; ++k) {
        const double yk = y[k];
        if (yk == 0.0)
            continue;
        for (int c = l_start_[static_cast<std::size_t>(k)]; c < l_start_[static_cast<std::size_t>(k) + 1]; ++c)
            y[l_index_[static_cast<std::size_t>(c)]] -= l_value_[static_cast<std::size_t>(c)] * yk;
    }
    for (int k = m - 1; k >= 0; --k) {
        if (y[k] == 0.0)
            continue;
        const double yk = y[k] /= u_diag_[static_cast<std::size_t>(k)];
        for (int c = u_start_[static_cast<std::size_t>(k)]; c < u_start_[static_cast<std::size_t>(k) + 1]; ++c)
            y[u_index_[static_cast<std::size_t>(c)]] -= u_value_[static_cast<std::size_t>(c)] * yk;
    }
    for (int k = 0; k < m; ++k)
        v[q_[static_cast<std::size_t>(k)]] = y[k];
}

void BasisLu::btran(double* v) const {
    const int m = m_;
    double* w = work_.data();
    for (int k = 0; k < m; ++k)
        w[k] = v[q_[static_cast<std::size_t>(k)]];
    // U^T and L^T by rows, skipping zero entries.
    for (int k = 0; k < m; ++k) {
        if (w[k] == 0.0)
            continue;
        const double wk = w[k] /= u_diag_[static_cast<std::size_t>(k)];
        for (int c = ut_start_[static_cast<std::size_t>(k)]; c < ut_start_[static_cast<std::size_t>(k) + 1]; ++c)
            w[ut_index_[static_cast<std::size_t>(c)]] -= ut_value_[static_cast<std::size_t>(c)] * wk;
    }
    for (int k = m - 1; k >= 0; --k) {
        const double wk = w[k];
        if (wk == 0.0)
            continue;
        for (int c = lt_start_[static_cast<std::size_t>(k)]; c < lt_start_[static_cast<std::size_t>(k) + 1]; ++c)
            w[lt_index_[static_cast<std::size_t>(c)]] -= lt_value_[static_cast<std::size_t>(c)] * wk;
    }
    for (int k = 0; k < m; ++k)
        v[prow_[static_cast<std::size_t>(k)]] = w[k];
}

} // namespace ems::lp
