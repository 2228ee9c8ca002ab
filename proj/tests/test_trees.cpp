#include <optional>

#include "doctest.h"
#include "helpers.hpp"
#include "qubokit/encoders.hpp"
#include "qubokit/oracle.hpp"
#include "qubokit/solvers.hpp"

using namespace qubokit;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

DegreeMstInstance fixture_mst() {
    return DegreeMstInstance(
        WeightedGraph(5, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 4}}, {1, 1, 1, 1000000, 1}), 2);
}

}  // namespace

TEST_CASE("tree encodings expose the documented variable layout") {
    DegreeMstInstance mst = fixture_mst();
    CHECK(mst.depth_bound == 2);
    EncodedModel corrected = build_degree_mst(mst, default_weights(mst));
    // 5 vertices * 3 depths + 5 edges * 2 depths * 2 directions + 5 * cap 2.
    CHECK(corrected.model.num_vars() == 45);
    CHECK(corrected.registry.label(0) == "xv[0,0]");
    EncodedModel published =
        build_model(mst, default_weights(mst, Formulation::lucas), Formulation::lucas);
    CHECK(published.model.num_vars() == 50);  // adds one ye flag per edge
    CHECK(published.registry.contains("ye[0,1]"));
    CHECK(!corrected.registry.contains("ye[0,1]"));

    SteinerInstance steiner(WeightedGraph(3, {{0, 1}, {1, 2}}, {1, 1}), {0, 2});
    EncodedModel st = build_steiner(steiner, default_weights(steiner));
    CHECK(st.model.num_vars() == 11);  // 3*2 xv + 1 inclusion flag + 2*1*2 xe
    CHECK(st.registry.contains("y[1]"));
    CHECK(!st.registry.contains("y[0]"));

    FvsInstance fvs(testing::complete_graph(3));
    CHECK(build_fvs(fvs, default_weights(fvs)).model.num_vars() == 21);

    FesInstance fes(Digraph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 1}, {4, 5}, {5, 0},
                                {5, 1}}));
    CHECK(build_fes(fes, default_weights(fes)).model.num_vars() == 90);

    EncodingOptions bare;
    bare.fes_no_arc_flags = true;
    FesInstance loop(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
    EncodedModel no_flags = build_fes(loop, default_weights(loop, Formulation::corrected, bare),
                                      bare);
    CHECK(no_flags.model.num_vars() == 15);  // 3*3 heights + 3*2 ordered arcs, no ye
    CHECK(!no_flags.registry.contains("ye[0,1]"));
}

TEST_CASE("canonical tree encodings price the tree cost exactly") {
    DegreeMstInstance mst = fixture_mst();
    RootedTree honest{std::nullopt, {{0, 1}, {0, 2}, {2, 4}, {3, 4}}};
    REQUIRE(check_feasible(mst, honest).ok());
    CHECK(objective(mst, honest) == 1000003);

    for (Formulation f : {Formulation::corrected, Formulation::lucas}) {
        EncodedModel em = build_model(mst, default_weights(mst, f), f);
        Assignment a = canonical_encode(em, honest);
        CHECK(energy(em.model, a) == analytic_canonical_energy(em, honest));
        CHECK(analytic_canonical_energy(em, honest) == em.weights.b * 1000003);
        auto [decoded, report] = decode(em, a);
        CHECK(report.ok());
        CHECK(std::get<RootedTree>(decoded).edges == honest.edges);
    }
}

TEST_CASE("explicit roots are honoured and depth bounds enforced") {
    WeightedGraph wg(5, path(5).edges(), {1, 1, 1, 1});
    DegreeMstInstance inst(wg, 2);  // depth bound defaults to 2
    EncodedModel em = build_degree_mst(inst, default_weights(inst));
    RootedTree whole{std::nullopt, wg.graph.edges()};

    // The centre of the path keeps every vertex within depth 2.
    Assignment centred = canonical_encode(em, whole);
    CHECK(centred[em.registry.at("xv[2,0]")] == 1);
    CHECK(energy(em.model, centred) == em.weights.b * 4);

    RootedTree rooted = whole;
    rooted.root = 2;
    CHECK(canonical_encode(em, rooted) == centred);
    rooted.root = 0;  // vertex 4 would need depth 4
    CHECK_THROWS_AS(canonical_encode(em, rooted), EncodingError);

    // A too-small explicit bound rejects at encode time as well.
    DegreeMstInstance tight(wg, 2, 1);
    EncodedModel tight_em = build_degree_mst(tight, default_weights(tight));
    CHECK_THROWS_AS(canonical_encode(tight_em, whole), EncodingError);
}

TEST_CASE("steiner trees solve exhaustively to the cheapest connector") {
    SteinerInstance steiner(WeightedGraph(3, {{0, 1}, {1, 2}}, {1, 1}), {0, 2});
    EncodedModel em = build_steiner(steiner, default_weights(steiner));
    SolveResult result = exhaustive_solve(em.model);
    CHECK(result.best_energy == 2);
    REQUIRE(result.minima.size() == 1);  // only the centre rooting fits depth 1
    auto [sol, report] = decode(em, result.minima[0]);
    CHECK(report.ok());
    CHECK(objective(steiner, sol) == 2);

    // With an expensive direct edge the model routes through the extra vertex.
    SteinerInstance detour(WeightedGraph(3, {{0, 2}, {0, 1}, {1, 2}}, {5, 1, 1}), {0, 2});
    EncodedModel em2 = build_steiner(detour, default_weights(detour));
    SolveResult r2 = exhaustive_solve(em2.model);
    OracleResult oracle = brute_force_optimum(detour);
    REQUIRE(oracle.best.has_value());
    CHECK(*oracle.best == 2);
    CHECK(r2.best_energy == em2.weights.b * 2);
    for (const auto& a : r2.minima) {
        auto [sol2, rep2] = decode(em2, a);
        CHECK(rep2.ok());
        CHECK(objective(detour, sol2) == 2);
    }
}

TEST_CASE("feedback vertex set canonical energies match the published analytics") {
    FvsInstance k4(testing::complete_graph(4), 2);
    FeedbackVertexSet both{{2, 3}};
    REQUIRE(check_feasible(k4, both).ok());

    EncodedModel corrected = build_fvs(k4, default_weights(k4));
    CHECK(analytic_canonical_energy(corrected, both) == corrected.weights.c * 2);
    CHECK(energy(corrected.model, canonical_encode(corrected, both)) ==
          analytic_canonical_energy(corrected, both));

    // As printed, the arc flags carry a factor depth_bound inside the square:
    // one-ended edges leave (1-D)^2 and the doubly removed edge (1-2D)^2.
    PenaltyWeights w{2, 1, 1};
    EncodedModel original = build_model(k4, w, Formulation::lucas);
    CHECK(analytic_canonical_energy(original, both) == 1 * 2 + 2 * (4 * 1 + 9));
    CHECK(energy(original.model, canonical_encode(original, both)) ==
          analytic_canonical_energy(original, both));

    EncodedModel symmetrized = build_model(k4, w, Formulation::lucas_symmetrized);
    CHECK(analytic_canonical_energy(symmetrized, both) == 1 * 2 + 2 * 1);
    CHECK(energy(symmetrized.model, canonical_encode(symmetrized, both)) ==
          analytic_canonical_energy(symmetrized, both));
}

TEST_CASE("feedback vertex set handles forests with several components") {
    // Removing vertex 0 of the bowtie leaves two disjoint edges.
    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    FvsInstance inst(bowtie, 2);
    FeedbackVertexSet cut{{0}};
    REQUIRE(check_feasible(inst, cut).ok());
    EncodedModel em = build_fvs(inst, default_weights(inst));
    Assignment a = canonical_encode(em, cut);
    CHECK(energy(em.model, a) == em.weights.c);
    auto [sol, report] = decode(em, a);
    CHECK(report.ok());
    CHECK(std::get<FeedbackVertexSet>(sol) == cut);
}

TEST_CASE("feedback edge set works without the per-arc flags") {
    FesInstance loop(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
    EncodingOptions bare;
    bare.fes_no_arc_flags = true;
    PenaltyWeights w = default_weights(loop, Formulation::corrected, bare);
    CHECK(w == PenaltyWeights{13, 2, 1});  // A > N * max_degree * B = 12
    CHECK(!validate_weights(loop, {12, 2, 1}, Formulation::corrected, bare).empty());

    EncodedModel em = build_fes(loop, w, bare);
    SolveResult result = exhaustive_solve(em.model);
    CHECK(result.best_energy == em.weights.c);
    CHECK(result.minima.size() == 3);  // one forced height order per removed arc
    for (const auto& a : result.minima) {
        auto [sol, report] = decode(em, a);
        CHECK(report.ok());
        CHECK(std::get<FeedbackEdgeSet>(sol).arcs.size() == 1);
    }

    FeedbackEdgeSet pick{{{2, 0}}};
    Assignment canon = canonical_encode(em, pick);
    CHECK(energy(em.model, canon) == analytic_canonical_energy(em, pick));
    CHECK(analytic_canonical_energy(em, pick) == em.weights.c);

    CHECK_THROWS_AS(build_model(loop, {2, 1, 1}, Formulation::lucas, bare), EncodingError);
}

TEST_CASE("degree cap below a vertex degree still prices trees correctly") {
    // A star needs degree 3 at the hub; a cap of 2 leaves no spanning tree.
    WeightedGraph star(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 1, 1});
    DegreeMstInstance inst(star, 2, 1);
    OracleResult oracle = brute_force_optimum(inst);
    CHECK(!oracle.best.has_value());
    EncodedModel em = build_degree_mst(inst, default_weights(inst));
    SolveResult result = exhaustive_solve(em.model);
    // Every assignment pays a penalty: nothing reaches the tree-only energy.
    for (const auto& a : result.minima) {
        auto [sol, report] = decode(em, a);
        CHECK(!report.ok());
    }
}
