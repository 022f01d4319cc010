#include <doctest.h>

#include <cmath>
#include <random>

#include "ems/lp/backend.hpp"
#include "random_lp.hpp"

using namespace ems;
using namespace ems::lp;

namespace {

// Enumerates every 0/1 assignment of the first n_int columns and solves the
// remaining LP with the dense oracle.
double enumerate_binaries(const oracle::DenseLp& base, int n_int) {
    double best = kInf;
    for (unsigned mask = 0; mask < (1u << n_int); ++mask) {
        auto lp = base;
        for (int j = 0; j < n_int; ++j) {
            const double v = (mask >> j) & 1u;
            lp.lower[static_cast<std::size_t>(j)] = v;
            lp.upper[static_cast<std::size_t>(j)] = v;
        }
        const auto r = oracle::solve_dense_lp(lp);
        if (r.status == oracle::DenseLpResult::Status::Optimal)
            best = std::min(best, r.objective);
    }
    return best;
}

} // namespace

TEST_CASE("branch-and-bound solves a small knapsack") {
    // max 10a + 13b + 7c + 8d  s.t. 4a + 6b + 3c + 5d <= 10
    Model m;
    const double value[] = {10, 13, 7, 8};
    const double weight[] = {4, 6, 3, 5};
    std::vector<Term> w;
    for (int j = 0; j < 4; ++j) {
        m.add_binary("x" + std::to_string(j), -value[j]);
        w.push_back({j, weight[j]});
    }
    m.add_constraint("cap", w, Sense::LessEqual, 10);
    auto backend = make_backend();
    const auto r = backend->solve(m, {});
    REQUIRE(r.status == MipStatus::Optimal);
    CHECK(r.objective == doctest::Approx(-23)); // b + a
    CHECK(m.max_violation(r.x) < 1e-9);
    CHECK(m.max_integrality_violation(r.x) == 0.0);
}

TEST_CASE("branch-and-bound matches enumeration on random MILPs") {
    std::mt19937_64 rng(4242);
    int feasible = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n_int = 1 + static_cast<int>(rng() % 6);
        const int n = n_int + 1 + static_cast<int>(rng() % 6);
        auto inst = testing::make_random_lp(rng, n, 2 + static_cast<int>(rng() % 6), n_int);
        const double expected = enumerate_binaries(inst.dense, n_int);
        MipOptions opts;
        opts.gap_tol = 0.0;
        const auto r = make_backend()->solve(inst.model, opts);
        CAPTURE(trial);
        if (!std::isfinite(expected)) {
            CHECK(r.status == MipStatus::Infeasible);
        } else {
            ++feasible;
            REQUIRE(r.status == MipStatus::Optimal);
            CHECK(r.objective == doctest::Approx(expected).epsilon(1e-9));
            CHECK(inst.model.max_violation(r.x) < 1e-7);
            CHECK(inst.model.max_integrality_violation(r.x) == 0.0);
        }
    }
    CHECK(feasible > 15);
}

TEST_CASE("unknown backends are rejected") {
    CHECK_THROWS_AS(make_backend("cplex"), std::invalid_argument);
    CHECK(make_backend("bnb")->name() == "bnb");
}
