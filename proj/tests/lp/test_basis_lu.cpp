#include <doctest.h>

#include <Eigen/Dense>
#include <numeric>
#include <random>

#include "ems/lp/backend.hpp"
#include "ems/lp/basis_lu.hpp"
#include "ems/lp/dual_simplex.hpp"
#include "random_lp.hpp"

using namespace ems;
using namespace ems::lp;

namespace {

struct Csc {
    std::vector<int> start{0};
    std::vector<int> index;
    std::vector<double> value;
};

// Sparse nonsingular matrix: a permuted diagonal plus a few off-diagonal
// entries, with some unit columns as in a simplex basis.
Eigen::MatrixXd random_basis(std::mt19937_64& rng, int m) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j) {
        const int i = perm[static_cast<std::size_t>(j)];
        b(i, j) = (u(rng) < 0.0 ? -1.0 : 1.0) * (1.0 + 2.0 * std::abs(u(rng)));
        if (u(rng) < -0.4)
            continue; // unit column
        const int extra = static_cast<int>(rng() % 4);
        for (int k = 0; k < extra; ++k)
            b(static_cast<int>(rng() % static_cast<unsigned>(m)), j) += u(rng);
    }
    return b;
}

Csc to_csc(const Eigen::MatrixXd& b) {
    Csc c;
    for (int j = 0; j < b.cols(); ++j) {
        for (int i = 0; i < b.rows(); ++i)
            if (b(i, j) != 0.0) {
                c.index.push_back(i);
                c.value.push_back(b(i, j));
            }
        c.start.push_back(static_cast<int>(c.index.size()));
    }
    return c;
}

} // namespace

TEST_CASE("basis LU solves agree with a dense factorization") {
    std::mt19937_64 rng(31337);
    std::normal_distribution<double> g;
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 60);
        const Eigen::MatrixXd b = random_basis(rng, m);
        const Eigen::FullPivLU<Eigen::MatrixXd> dense(b);
        if (!dense.isInvertible() || dense.rcond() < 1e-8)
            continue;
        const Csc c = to_csc(b);
        BasisLu lu;
        REQUIRE(lu.factorize(m, c.start, c.index, c.value));
        Eigen::VectorXd rhs(m);
        for (int i = 0; i < m; ++i)
            rhs(i) = g(rng);

        Eigen::VectorXd x = rhs;
        lu.ftran(x.data());
        CHECK((b * x - rhs).lpNorm<Eigen::Infinity>() <= 1e-9 * (1.0 + rhs.lpNorm<Eigen::Infinity>()));

        Eigen::VectorXd y = rhs;
        lu.btran(y.data());
        CHECK((b.transpose() * y - rhs).lpNorm<Eigen::Infinity>() <= 1e-9 * (1.0 + rhs.lpNorm<Eigen::Infinity>()));
        ++checked;
    }
    CHECK(checked > 40);
}

TEST_CASE("basis LU detects singular matrices") {
    Eigen::MatrixXd b(3, 3);
    b << 1, 2, 3, 2, 4, 6, 0, 1, 1;
    const Csc c = to_csc(b);
    BasisLu lu;
    CHECK_FALSE(lu.factorize(3, c.start, c.index, c.value));
}

TEST_CASE("adding a row keeps the warm start consistent with a cold solve") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        auto inst = testing::make_random_lp(rng, n, 2 + static_cast<int>(rng() % 6));
        DualSimplex warm(inst.model);
        if (warm.solve() != LpStatus::Optimal)
            continue;
        std::vector<Term> terms;
        for (int j = 0; j < n; ++j)
            if (rng() % 2)
                terms.push_back({j, std::round(u(rng) * 2.0) / 2.0});
        // Cut off the current optimum by half a unit where possible.
        double activity = 0.0;
        for (const auto& t : terms)
            activity += t.coef * warm.value(t.var);
        const double rhs = activity + 0.5;
        warm.add_row(terms, rhs, kInf);
        Model extended = inst.model;
        extended.add_constraint("extra", terms, Sense::GreaterEqual, rhs);
        DualSimplex cold(extended);
        const auto ws = warm.solve();
        const auto cs = cold.solve();
        CAPTURE(trial);
        CHECK(ws == cs);
        if (ws == LpStatus::Optimal && cs == LpStatus::Optimal) {
            CHECK(warm.objective() == doctest::Approx(cold.objective()).epsilon(1e-9));
            ++compared;
        }
    }
    CHECK(compared > 10);
}

TEST_CASE("cut rounds do not change the MILP optimum") {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 80; ++trial) {
        const int n_int = 2 + static_cast<int>(rng() % 5);
        auto inst = testing::make_random_lp(rng, n_int + 3, 4, n_int);
        MipOptions none;
        none.cut_rounds = 0;
        none.gap_tol = 0.0;
        MipOptions many = none;
        many.cut_rounds = 10;
        const auto a = make_backend()->solve(inst.model, none);
        const auto b = make_backend()->solve(inst.model, many);
        CAPTURE(trial);
        REQUIRE(a.status == b.status);
        if (a.status == MipStatus::Optimal)
            CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-9));
    }
}

TEST_CASE("independent blocks are solved separately with the same result") {
    std::mt19937_64 rng(4711);
    int infeasible = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Model joint;
        for (int block = 0; block < 3; ++block) {
            const int n_int = 1 + static_cast<int>(rng() % 4);
            auto inst = testing::make_random_lp(rng, n_int + 2, 3, n_int);
            const int offset = joint.num_vars();
            for (const auto& v : inst.model.vars())
                joint.add_variable(v.name, v.lower, v.upper, v.cost, v.integer);
            for (const auto& row : inst.model.rows()) {
                std::vector<Term> terms;
                for (const auto& t : row.terms)
                    terms.push_back({t.var + offset, t.coef});
                if (row.lower == row.upper)
                    joint.add_constraint(row.name, terms, Sense::Equal, row.lower);
                else if (std::isfinite(row.lower))
                    joint.add_constraint(row.name, terms, Sense::GreaterEqual, row.lower);
                else
                    joint.add_constraint(row.name, terms, Sense::LessEqual, row.upper);
            }
        }
        joint.set_objective_constant(1.5);
        MipOptions split;
        split.gap_tol = 0.0;
        MipOptions whole = split;
        whole.decompose = false;
        const auto a = make_backend()->solve(joint, split);
        const auto b = make_backend()->solve(joint, whole);
        CAPTURE(trial);
        REQUIRE(a.status == b.status);
        if (a.status == MipStatus::Optimal) {
            CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-9));
            CHECK(joint.objective_value(a.x) == doctest::Approx(a.objective).epsilon(1e-9));
            CHECK(joint.max_violation(a.x) < 1e-7);
            CHECK(joint.max_integrality_violation(a.x) == 0.0);
        } else {
            ++infeasible;
        }
    }
    CHECK(infeasible > 0);
}
