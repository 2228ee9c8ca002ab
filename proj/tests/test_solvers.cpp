#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "qubokit/encoders.hpp"
#include "qubokit/solvers.hpp"

using namespace qubokit;

namespace {

QuboModel random_model(testing::Rng& rng, Index n) {
    QuboModel model(n);
    model.add_offset(testing::rand_int(rng, -5, 5));
    for (Index i = 0; i < n; ++i)
        if (testing::rand_bool(rng, 0.7)) model.add_linear(i, testing::rand_int(rng, -9, 9));
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (testing::rand_bool(rng, 0.4))
                model.add_quadratic(i, j, testing::rand_int(rng, -9, 9));
    return model;
}

}  // namespace

TEST_CASE("exhaustive solve matches an independent full scan") {
    testing::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Index n = static_cast<Index>(testing::rand_int(rng, 1, 10));
        QuboModel model = random_model(rng, n);

        Coeff best = 0;
        std::set<Assignment> argmin;
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
            Assignment a = testing::nth_assignment(n, k);
            Coeff e = testing::naive_energy(model, a);
            if (k == 0 || e < best) {
                best = e;
                argmin.clear();
            }
            if (e == best) argmin.insert(a);
        }

        SolveResult result = exhaustive_solve(model);
        CHECK(result.best_energy == best);
        CHECK(result.stats.evaluations == (std::uint64_t{1} << n));
        REQUIRE(result.minima.size() == argmin.size());
        for (const auto& a : result.minima) {
            CHECK(argmin.count(a) == 1);
            CHECK(energy(model, a) == best);
        }
    }
}

TEST_CASE("exhaustive minima come back in lexicographic order") {
    QuboModel flat(3);  // every assignment ties at the offset
    flat.add_offset(5);
    SolveResult result = exhaustive_solve(flat);
    CHECK(result.best_energy == 5);
    REQUIRE(result.minima.size() == 8);
    for (std::size_t i = 1; i < result.minima.size(); ++i)
        CHECK(result.minima[i - 1] < result.minima[i]);
    CHECK(result.minima.front() == Assignment{0, 0, 0});
    CHECK(result.minima.back() == Assignment{1, 1, 1});
}

TEST_CASE("exhaustive solve handles the empty model") {
    QuboModel empty(0);
    empty.add_offset(-7);
    SolveResult result = exhaustive_solve(empty);
    CHECK(result.best_energy == -7);
    REQUIRE(result.minima.size() == 1);
    CHECK(result.minima[0].empty());
}

TEST_CASE("exhaustive solve refuses models beyond the variable cap") {
    QuboModel model(11);
    CHECK_THROWS_AS(exhaustive_solve(model, 10), CapacityError);
    QuboModel wide(25);
    CHECK_THROWS_AS(exhaustive_solve(wide), CapacityError);
}

TEST_CASE("annealing is deterministic for a fixed seed") {
    testing::Rng rng(9);
    QuboModel model = random_model(rng, 12);
    AnnealParams params;
    params.seed = 7;
    params.num_restarts = 8;
    params.num_sweeps = 200;
    SolveResult first = anneal(model, params);
    SolveResult second = anneal(model, params);
    CHECK(first.best_energy == second.best_energy);
    CHECK(first.minima == second.minima);
    CHECK(first.stats.seed == 7);
    CHECK(first.stats.restarts == 8);
}

TEST_CASE("annealing is sound and reaches small optima") {
    testing::Rng rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        QuboModel model = random_model(rng, static_cast<Index>(testing::rand_int(rng, 2, 12)));
        SolveResult exact = exhaustive_solve(model);
        AnnealParams params;
        params.seed = 1000 + trial;
        params.num_restarts = 16;
        params.num_sweeps = 400;
        SolveResult approx = anneal(model, params);
        REQUIRE(approx.minima.size() == 1);
        CHECK(energy(model, approx.minima[0]) == approx.best_energy);
        CHECK(approx.best_energy >= exact.best_energy);
        // Dense sweeps on a dozen variables find the optimum in practice.
        CHECK(approx.best_energy == exact.best_energy);
    }
}

TEST_CASE("annealing solves the clique model") {
    CliqueInstance inst(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}));
    EncodedModel em = build_clique(inst, {9, 2, 1});
    SolveResult result = anneal(em.model);
    CHECK(result.best_energy == -3);
    auto [sol, report] = decode(em, result.minima[0]);
    CHECK(report.ok());
    CHECK(std::get<CliqueSet>(sol).vertices.size() == 3);
}

TEST_CASE("annealing validates its parameters") {
    QuboModel model(2);
    AnnealParams params;
    params.num_restarts = 0;
    CHECK_THROWS_AS(anneal(model, params), std::invalid_argument);
    params.num_restarts = 1;
    params.num_sweeps = 0;
    CHECK_THROWS_AS(anneal(model, params), std::invalid_argument);
}
