#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "ems/lp/backend.hpp"
#include "ems/lp/dual_simplex.hpp"

namespace ems::lp {

const char* to_string(MipStatus status) {
    switch (status) {
    case MipStatus::Optimal: return "optimal";
    case MipStatus::FeasibleGap: return "feasible-gap";
    case MipStatus::Infeasible: return "infeasible";
    case MipStatus::Unbounded: return "unbounded";
    case MipStatus::Error: return "error";
    }
    return "unknown";
}

namespace {

struct BoundChange {
    int var;
    double lower;
    double upper;
};

struct Node {
    double bound;
    int depth;
    std::vector<BoundChange> path; // decisions from the root, in order
    // The decision that created this node, used to learn pseudocosts.
    int branch_var = -1;
    bool branch_up = false;
    double branch_frac = 0.0;
    double parent_objective = 0.0;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound)
            return a.bound > b.bound;
        return a.depth < b.depth;
    }
};

// Per-column average objective gain per unit of rounding, one estimate for
// each branching direction.
class Pseudocosts {
public:
    explicit Pseudocosts(int n) : sum_(2 * static_cast<std::size_t>(n), 0.0), count_(sum_.size(), 0) {}

    void record(int var, bool up, double gain, double frac) {
        if (frac <= 0.0)
            return;
        const std::size_t k = index(var, up);
        sum_[k] += std::max(0.0, gain) / frac;
        ++count_[k];
        total_[up] += std::max(0.0, gain) / frac;
        ++total_count_[up];
    }
    int count(int var) const { return std::min(count_[index(var, false)], count_[index(var, true)]); }
    double get(int var, bool up) const {
        const std::size_t k = index(var, up);
        if (count_[k] > 0)
            return sum_[k] / count_[k];
        return total_count_[up] > 0 ? total_[up] / total_count_[up] : 1.0;
    }

private:
    static std::size_t index(int var, bool up) { return 2 * static_cast<std::size_t>(var) + (up ? 1 : 0); }

    std::vector<double> sum_;
    std::vector<int> count_;
    double total_[2] = {0.0, 0.0};
    long total_count_[2] = {0, 0};
};

struct Cut {
    std::vector<Term> terms; // sum(terms) >= rhs
    double rhs;
    double efficacy;
};

// Gomory mixed-integer cuts from the tableau rows of fractional basic integer
// columns. Nonbasic columns are measured from the bound they sit on, so the
// cuts are valid for every integer point within the LP's current bounds.
std::vector<Cut> gomory_cuts(const DualSimplex& lp, const Model& model, const std::vector<double>& x) {
    constexpr double kMinFraction = 0.01;
    constexpr double kDropTol = 1e-9;
    constexpr double kMaxDynamism = 1e8;
    const int n = lp.num_vars();
    std::vector<Cut> cuts;
    std::vector<std::pair<int, double>> row;
    std::vector<Term> row_terms;
    std::vector<double> coef(static_cast<std::size_t>(n), 0.0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> support;

    for (int r = 0; r < lp.num_rows(); ++r) {
        const int p = lp.basic_column(r);
        if (p >= n || !model.var(p).integer)
            continue;
        const double f0 = lp.value(p) - std::floor(lp.value(p));
        if (f0 < kMinFraction || f0 > 1.0 - kMinFraction)
            continue;
        lp.tableau_row(r, row);

        const auto add = [&](int j, double c) {
            const auto k = static_cast<std::size_t>(j);
            if (!seen[k]) {
                seen[k] = true;
                support.push_back(j);
            }
            coef[k] += c;
        };
        bool ok = true;
        double rhs = 1.0;
        support.clear();
        for (const auto& [j, alpha] : row) {
            const double lo = lp.bound_lower(j);
            const double hi = lp.bound_upper(j);
            if (lo == hi)
                continue;
            const bool up = lp.at_upper(j);
            const double bound = up ? hi : lo;
            if (lp.at_artificial_bound(j) || !std::isfinite(bound)) {
                ok = false;
                break;
            }
            const double a = up ? -alpha : alpha;
            double g;
            if (j < n && model.var(j).integer) {
                const double fj = a - std::floor(a);
                g = fj <= f0 ? fj / f0 : (1.0 - fj) / (1.0 - f0);
            } else {
                g = a >= 0.0 ? a / f0 : -a / (1.0 - f0);
            }
            if (g == 0.0)
                continue;
            // g * (x_j - lo) or g * (hi - x_j); a logical stands for its row.
            const double sign = up ? -1.0 : 1.0;
            rhs += g * sign * bound;
            if (j < n) {
                add(j, g * sign);
            } else {
                lp.row_terms(j - n, row_terms);
                for (const Term& t : row_terms)
                    add(t.var, g * sign * t.coef);
            }
        }

        Cut cut{{}, rhs, 0.0};
        double biggest = 0.0;
        for (int j : support)
            biggest = std::max(biggest, std::abs(coef[static_cast<std::size_t>(j)]));
        double smallest = kInf;
        for (int j : support) {
            const auto k = static_cast<std::size_t>(j);
            const double c = coef[k];
            coef[k] = 0.0;
            seen[k] = false;
            if (!ok || c == 0.0)
                continue;
            if (std::abs(c) < kDropTol * biggest) {
                // Drop the term, weakening the cut by its largest value.
                const double worst = c > 0.0 ? c * lp.bound_upper(j) : c * lp.bound_lower(j);
                if (std::isfinite(worst) && !lp.at_artificial_bound(j) && std::abs(worst) < 1e8) {
                    cut.rhs -= worst;
                    continue;
                }
            }
            smallest = std::min(smallest, std::abs(c));
            cut.terms.push_back({j, c});
        }
        if (!ok || cut.terms.empty() || biggest > kMaxDynamism * smallest)
            continue;
        double activity = 0.0;
        double norm = 0.0;
        for (const Term& t : cut.terms) {
            activity += t.coef * x[static_cast<std::size_t>(t.var)];
            norm += t.coef * t.coef;
        }
        const double violation = cut.rhs - activity;
        if (violation <= 1e-6 * std::max(1.0, std::abs(cut.rhs)))
            continue;
        cut.efficacy = violation / std::sqrt(norm);
        cuts.push_back(std::move(cut));
    }
    return cuts;
}

// Groups columns into blocks that share no row. Columns in no row at all are
// collected into a single block.
std::vector<std::vector<int>> independent_blocks(const Model& model) {
    const int n = model.num_vars();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&parent](int j) {
        while (parent[static_cast<std::size_t>(j)] != j)
            j = parent[static_cast<std::size_t>(j)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(j)])];
        return j;
    };
    std::vector<char> in_row(static_cast<std::size_t>(n), 0);
    for (const Row& row : model.rows()) {
        if (row.terms.empty())
            continue;
        const int a = find(row.terms.front().var);
        for (const Term& t : row.terms) {
            in_row[static_cast<std::size_t>(t.var)] = 1;
            const int b = find(t.var);
            if (a != b)
                parent[static_cast<std::size_t>(b)] = a;
        }
    }
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> blocks;
    int loose = -1;
    for (int j = 0; j < n; ++j) {
        int& slot = in_row[static_cast<std::size_t>(j)] ? block_of[static_cast<std::size_t>(find(j))] : loose;
        if (slot < 0) {
            slot = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(slot)].push_back(j);
    }
    return blocks;
}

double branch_score(double down_gain, double up_gain) {
    constexpr double eps = 1e-6;
    return std::max(down_gain, eps) * std::max(up_gain, eps);
}

// Best-first branch-and-bound with depth-first plunging. The LP relaxation
// is one DualSimplex instance reused across nodes: a node only changes
// bounds of integer columns, so the previous basis stays dual feasible.
//
// Branching uses pseudocosts; columns whose pseudocosts rest on fewer than
// `kReliability` observations are evaluated by strong branching first.
class BranchAndBound final : public SolverBackend {
public:
    std::string_view name() const override { return "bnb"; }

    MipResult solve(const Model& model, const MipOptions& options) override {
        if (!options.decompose)
            return solve_block(model, options);
        auto blocks = independent_blocks(model);
        if (blocks.size() <= 1)
            return solve_block(model, options);
        return solve_blocks(model, blocks, options);
    }

private:
    // Solves each block as its own model and assembles the full point.
    MipResult solve_blocks(const Model& model, const std::vector<std::vector<int>>& blocks,
                           const MipOptions& options) {
        const auto started = std::chrono::steady_clock::now();
        MipResult result;
        result.x.assign(static_cast<std::size_t>(model.num_vars()), 0.0);
        double objective = model.objective_constant();
        double bound = model.objective_constant();
        bool limited = false;
        for (const Row& row : model.rows()) {
            if (row.terms.empty() && (row.lower > options.feasibility_tol || row.upper < -options.feasibility_tol)) {
                result.status = MipStatus::Infeasible;
                result.message = "constant row " + row.name + " cannot be satisfied";
                result.x.clear();
                return result;
            }
        }
        MipOptions block_options = options;
        block_options.repair = nullptr; // the hook sees full points only
        for (const auto& vars : blocks) {
            std::vector<int> local(static_cast<std::size_t>(model.num_vars()), -1);
            Model sub;
            for (int j : vars) {
                const Variable& v = model.var(j);
                local[static_cast<std::size_t>(j)] = sub.add_variable(v.name, v.lower, v.upper, v.cost, v.integer);
                sub.set_branch_priority(local[static_cast<std::size_t>(j)], v.branch_priority);
            }
            for (const Row& row : model.rows()) {
                if (row.terms.empty() || local[static_cast<std::size_t>(row.terms.front().var)] < 0)
                    continue;
                std::vector<Term> terms;
                for (const Term& t : row.terms)
                    terms.push_back({local[static_cast<std::size_t>(t.var)], t.coef});
                if (row.lower == row.upper) {
                    sub.add_constraint(row.name, std::move(terms), Sense::Equal, row.lower);
                    continue;
                }
                if (std::isfinite(row.lower))
                    sub.add_constraint(row.name, terms, Sense::GreaterEqual, row.lower);
                if (std::isfinite(row.upper))
                    sub.add_constraint(row.name, std::move(terms), Sense::LessEqual, row.upper);
            }
            const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            block_options.time_limit_s = std::max(0.0, options.time_limit_s - elapsed);
            const MipResult r = solve_block(sub, block_options);
            result.nodes += r.nodes;
            result.lp_iterations += r.lp_iterations;
            if (r.status == MipStatus::Infeasible || r.status == MipStatus::Unbounded || r.status == MipStatus::Error) {
                result.status = r.status;
                result.message = r.message;
                result.x.clear();
                result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
                return result;
            }
            limited = limited || r.status == MipStatus::FeasibleGap;
            objective += r.objective;
            bound += r.best_bound;
            for (int j : vars)
                result.x[static_cast<std::size_t>(j)] = r.x[static_cast<std::size_t>(local[static_cast<std::size_t>(j)])];
        }
        result.objective = objective;
        result.best_bound = std::min(bound, objective);
        result.gap = std::max(0.0, (objective - result.best_bound) / std::max(1.0, std::abs(objective)));
        result.status = limited || result.gap > options.gap_tol ? MipStatus::FeasibleGap : MipStatus::Optimal;
        if (result.status == MipStatus::FeasibleGap)
            result.message = limited ? "limit reached in a block" : "block gaps add up beyond the tolerance";
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return result;
    }

    MipResult solve_block(const Model& model, const MipOptions& options) {
        const auto started = std::chrono::steady_clock::now();
        const auto deadline = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                            std::chrono::duration<double>(options.time_limit_s));
        MipResult result;
        DualSimplex lp(model);
        LpOptions lp_options;
        lp_options.deadline = deadline;
        LpOptions strong_options = lp_options;
        strong_options.max_iterations = kStrongIterations;

        std::vector<int> ints;
        for (int j = 0; j < model.num_vars(); ++j)
            if (model.var(j).integer)
                ints.push_back(j);
        std::vector<double> root_lower(static_cast<std::size_t>(model.num_vars()));
        std::vector<double> root_upper(root_lower.size());
        for (int j : ints) {
            // Integer columns get integral bounds up front.
            root_lower[static_cast<std::size_t>(j)] = std::ceil(model.var(j).lower - options.integrality_tol);
            root_upper[static_cast<std::size_t>(j)] = std::floor(model.var(j).upper + options.integrality_tol);
            lp.set_bounds(j, root_lower[static_cast<std::size_t>(j)], root_upper[static_cast<std::size_t>(j)]);
        }
        Pseudocosts pseudo(model.num_vars());

        double incumbent = kInf;
        std::vector<double> best_x;
        double pruned_bound = kInf;
        bool hit_limit = false;
        std::string limit_message;

        const auto cutoff = [&]() {
            if (!std::isfinite(incumbent))
                return kInf;
            return incumbent - std::max(options.gap_tol * std::max(1.0, std::abs(incumbent)), 1e-9);
        };
        const auto apply_path = [&](const std::vector<BoundChange>& path) {
            for (int j : ints)
                if (lp.lower(j) != root_lower[static_cast<std::size_t>(j)] ||
                    lp.upper(j) != root_upper[static_cast<std::size_t>(j)])
                    lp.set_bounds(j, root_lower[static_cast<std::size_t>(j)], root_upper[static_cast<std::size_t>(j)]);
            for (const auto& c : path)
                lp.set_bounds(c.var, c.lower, c.upper);
        };
        // Fractional columns of the highest branching priority present.
        const auto fractional = [&]() {
            std::vector<int> out;
            int priority = 0;
            for (int j : ints) {
                const double v = lp.value(j);
                if (std::abs(v - std::round(v)) <= options.integrality_tol)
                    continue;
                const int pr = model.var(j).branch_priority;
                if (out.empty() || pr > priority) {
                    out.clear();
                    priority = pr;
                }
                if (pr == priority)
                    out.push_back(j);
            }
            return out;
        };
        const auto accept_point = [&](std::vector<double> x) {
            for (int j : ints)
                x[static_cast<std::size_t>(j)] = std::round(x[static_cast<std::size_t>(j)]);
            const double obj = model.objective_value(x);
            if (obj >= incumbent)
                return;
            incumbent = obj;
            best_x = std::move(x);
        };
        const auto accept = [&](double obj) {
            if (obj < incumbent)
                accept_point(lp.solution());
        };
        // Hands the node's LP point to the repair hook and keeps the result
        // when it is integral and feasible for the original model.
        const auto try_repair = [&]() {
            if (!options.repair)
                return;
            std::vector<double> x = lp.solution();
            if (!options.repair(x))
                return;
            if (model.max_integrality_violation(x) > options.integrality_tol)
                return;
            double scale = 1.0;
            for (double v : x)
                scale = std::max(scale, std::abs(v));
            if (model.max_violation(x) > options.feasibility_tol * scale)
                return;
            accept_point(std::move(x));
        };
        // Fix every integer column at its rounded LP value and re-solve.
        const auto rounding_heuristic = [&](const std::vector<BoundChange>& path) {
            std::vector<BoundChange> fixed = path;
            for (int j : ints) {
                const double v = std::clamp(std::round(lp.value(j)), lp.lower(j), lp.upper(j));
                fixed.push_back({j, v, v});
            }
            apply_path(fixed);
            const LpStatus st = lp.solve(lp_options);
            if (st == LpStatus::Optimal)
                accept(lp.objective());
            apply_path(path);
        };
        // Objective of the node LP with one column's bounds replaced. An
        // iteration-limited dual simplex still yields a valid lower bound.
        const auto probe = [&](int j, double lo, double hi) {
            const double old_lo = lp.lower(j);
            const double old_hi = lp.upper(j);
            lp.set_bounds(j, lo, hi);
            const LpStatus st = lp.solve(strong_options);
            double obj = -kInf;
            if (st == LpStatus::Infeasible)
                obj = kInf;
            else if (st == LpStatus::Optimal || st == LpStatus::IterationLimit)
                obj = lp.objective();
            lp.set_bounds(j, old_lo, old_hi);
            return obj;
        };

        // Rounds of Gomory cuts at the root while they move the bound.
        const auto add_root_cuts = [&]() {
            double obj = lp.objective();
            for (int round = 0; round < options.cut_rounds; ++round) {
                auto cuts = gomory_cuts(lp, model, lp.solution());
                if (cuts.empty())
                    break;
                std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) { return a.efficacy > b.efficacy; });
                if (cuts.size() > kCutsPerRound)
                    cuts.resize(kCutsPerRound);
                for (const Cut& c : cuts)
                    lp.add_row(c.terms, c.rhs, kInf);
                const LpStatus st = lp.solve(lp_options);
                if (st != LpStatus::Optimal)
                    return st;
                const double next = lp.objective();
                const bool stalled = next - obj < 1e-4 * std::max(1.0, std::abs(obj));
                obj = next;
                if (stalled)
                    break;
            }
            return LpStatus::Optimal;
        };

        struct Choice {
            enum class Kind { Branch, Tighten, Prune } kind = Kind::Branch;
            int var = -1;
            double value = 0.0;
            double down_bound = -kInf;
            double up_bound = -kInf;
            BoundChange fix{};
        };
        const auto choose = [&](const std::vector<int>& cands, double obj, int depth) {
            std::vector<std::pair<double, int>> order;
            std::vector<double> values(cands.size());
            for (std::size_t i = 0; i < cands.size(); ++i) {
                const double v = lp.value(cands[i]);
                values[i] = v;
                const double f = v - std::floor(v);
                order.push_back({branch_score(pseudo.get(cands[i], false) * f, pseudo.get(cands[i], true) * (1 - f)),
                                 static_cast<int>(i)});
            }
            std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

            Choice best;
            double best_score = -1.0;
            int probes = 0;
            int stale = 0;
            const int max_probes = depth == 0 ? kStrongCandidatesRoot : kStrongCandidates;
            for (const auto& [estimate, i] : order) {
                const int j = cands[static_cast<std::size_t>(i)];
                const double v = values[static_cast<std::size_t>(i)];
                const double f = v - std::floor(v);
                double score = estimate;
                double down_bound = -kInf;
                double up_bound = -kInf;
                if (pseudo.count(j) < kReliability && probes < max_probes) {
                    ++probes;
                    const double lo = lp.lower(j);
                    const double hi = lp.upper(j);
                    down_bound = probe(j, lo, std::floor(v));
                    up_bound = probe(j, std::ceil(v), hi);
                    const double limit = cutoff();
                    const bool down_dead = down_bound >= limit;
                    const bool up_dead = up_bound >= limit;
                    if (down_dead && up_dead) {
                        best.kind = Choice::Kind::Prune;
                        best.down_bound = std::min(down_bound, up_bound);
                        return best;
                    }
                    if (down_dead || up_dead) {
                        best.kind = Choice::Kind::Tighten;
                        best.fix = down_dead ? BoundChange{j, std::ceil(v), hi} : BoundChange{j, lo, std::floor(v)};
                        return best;
                    }
                    if (std::isfinite(down_bound))
                        pseudo.record(j, false, down_bound - obj, f);
                    if (std::isfinite(up_bound))
                        pseudo.record(j, true, up_bound - obj, 1 - f);
                    score = branch_score(down_bound - obj, up_bound - obj);
                } else if (probes >= max_probes && ++stale > kLookahead) {
                    break;
                }
                if (score > best_score) {
                    best_score = score;
                    best.var = j;
                    best.value = v;
                    best.down_bound = down_bound;
                    best.up_bound = up_bound;
                    stale = 0;
                }
            }
            return best;
        };

        std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
        std::optional<Node> current = Node{-kInf, 0, {}};
        long nodes = 0;

        while (current || !open.empty()) {
            if (!current) {
                Node next = open.top();
                open.pop();
                if (next.bound >= cutoff()) {
                    pruned_bound = std::min(pruned_bound, next.bound);
                    continue;
                }
                current = std::move(next);
            }
            if (nodes >= options.node_limit) {
                hit_limit = true;
                limit_message = "node limit reached";
                open.push(std::move(*current));
                current.reset();
                break;
            }
            if (std::chrono::steady_clock::now() > deadline) {
                hit_limit = true;
                limit_message = "time limit reached";
                open.push(std::move(*current));
                current.reset();
                break;
            }

            Node node = std::move(*current);
            current.reset();
            ++nodes;
            apply_path(node.path);
            LpStatus st = lp.solve(lp_options);
            if (st == LpStatus::Optimal && node.depth == 0 && node.path.empty())
                st = add_root_cuts();
            if (st == LpStatus::Infeasible)
                continue;
            if (st == LpStatus::Unbounded) {
                if (node.depth == 0) {
                    result.status = MipStatus::Unbounded;
                    result.message = "LP relaxation is unbounded";
                    break;
                }
                continue;
            }
            if (st == LpStatus::TimeLimit) {
                hit_limit = true;
                limit_message = "time limit reached";
                open.push(std::move(node));
                break;
            }
            if (st != LpStatus::Optimal) {
                result.status = MipStatus::Error;
                result.message = std::string("LP relaxation failed: ") + to_string(st);
                open = {};
                incumbent = kInf;
                break;
            }
            const double obj = lp.objective();
            if (node.branch_var >= 0) {
                pseudo.record(node.branch_var, node.branch_up, obj - node.parent_objective, node.branch_frac);
                node.branch_var = -1;
            }
            node.bound = std::max(node.bound, obj);
            if (obj >= cutoff()) {
                pruned_bound = std::min(pruned_bound, obj);
                continue;
            }
            auto cands = fractional();
            if (cands.empty()) {
                accept(obj);
                continue;
            }
            try_repair();
            if (obj >= cutoff()) {
                pruned_bound = std::min(pruned_bound, obj);
                continue;
            }
            if (node.depth == 0 || nodes % 200 == 0) {
                rounding_heuristic(node.path);
                // Restore this node's relaxation for the branching values.
                lp.solve(lp_options);
                if (obj >= cutoff()) {
                    pruned_bound = std::min(pruned_bound, obj);
                    continue;
                }
                cands = fractional();
                if (cands.empty()) {
                    accept(lp.objective());
                    continue;
                }
            }

            const Choice choice = choose(cands, obj, node.depth);
            if (choice.kind == Choice::Kind::Prune) {
                pruned_bound = std::min(pruned_bound, choice.down_bound);
                continue;
            }
            if (choice.kind == Choice::Kind::Tighten) {
                node.path.push_back(choice.fix);
                --nodes;
                current = std::move(node);
                continue;
            }

            const int j = choice.var;
            const double v = choice.value;
            const double f = v - std::floor(v);
            // Probed children already fed the pseudocosts; the others learn
            // from their own solve.
            const bool probed = choice.down_bound > -kInf;
            Node down{std::max(obj, choice.down_bound), node.depth + 1, node.path, probed ? -1 : j, false, f, obj};
            down.path.push_back({j, lp.lower(j), std::floor(v)});
            Node up{std::max(obj, choice.up_bound), node.depth + 1, std::move(node.path), probed ? -1 : j, true, 1 - f, obj};
            up.path.push_back({j, std::ceil(v), lp.upper(j)});
            const bool go_up = probed ? up.bound < down.bound : f >= 0.5;
            if (go_up) {
                open.push(std::move(down));
                current = std::move(up);
            } else {
                open.push(std::move(up));
                current = std::move(down);
            }
        }

        result.nodes = nodes;
        result.lp_iterations = lp.iterations();
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (result.status == MipStatus::Unbounded || (result.status == MipStatus::Error && !result.message.empty()))
            return result;

        double bound = std::min(pruned_bound, incumbent);
        if (hit_limit && !open.empty())
            bound = std::min(bound, open.top().bound);
        if (!std::isfinite(incumbent)) {
            if (hit_limit) {
                result.status = MipStatus::Error;
                result.message = limit_message + " without a feasible solution";
            } else {
                result.status = MipStatus::Infeasible;
                result.message = "no integer feasible point";
            }
            return result;
        }
        result.objective = incumbent;
        result.best_bound = bound;
        result.gap = std::max(0.0, (incumbent - bound) / std::max(1.0, std::abs(incumbent)));
        result.x = std::move(best_x);
        result.status = hit_limit && result.gap > options.gap_tol ? MipStatus::FeasibleGap : MipStatus::Optimal;
        if (hit_limit)
            result.message = limit_message;
        return result;
    }

    static constexpr int kReliability = 4;
    static constexpr int kStrongCandidates = 8;
    static constexpr int kStrongCandidatesRoot = 40;
    static constexpr int kLookahead = 8;
    static constexpr long kStrongIterations = 60;
    static constexpr std::size_t kCutsPerRound = 50;
};

} // namespace

std::unique_ptr<SolverBackend> make_backend(std::string_view name) {
    if (name.empty() || name == "bnb")
        return std::make_unique<BranchAndBound>();
    throw std::invalid_argument("unknown solver backend '" + std::string(name) + "'");
}

std::vector<std::string> backend_names() { return {"bnb"}; }

} // namespace ems::lp
