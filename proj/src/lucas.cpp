// The counterexample catalog: concrete instances on which the as-published
// formulations score an infeasible configuration at or below every honest
// one, plus the machinery that checks each case against both models.
#include <utility>

#include "qubokit/lucas.hpp"

namespace qubokit {

namespace {

CounterexampleCase clique_case() {
    CounterexampleCase c;
    c.name = "clique-weight-gap";
    c.description =
        "4-vertex graph with one missing edge, max degree 3. Under the weaker "
        "published weight rules (A > max_degree*B, C < A - max_degree*B) the "
        "reward C for claiming a fourth vertex can exceed the penalty B for "
        "the missing edge, so the full vertex set beats every true clique.";
    c.instance = CliqueInstance(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}));
    c.incorrect_formulation = Formulation::lucas_extended;
    c.incorrect_weights = PenaltyWeights{10, 2, 3};
    c.corrected_weights = PenaltyWeights{9, 2, 1};
    c.exploit_labels = {var_label("x", 0), var_label("x", 1), var_label("x", 2),
                        var_label("x", 3), var_label("y", 4)};
    c.honest_solution = CliqueSet{{0, 1, 2}};
    return c;
}

CounterexampleCase coloring_case() {
    CounterexampleCase c;
    c.name = "coloring-dropped-vertex";
    c.description =
        "Two colours on the complete 5-vertex graph. With the one-hot term "
        "and the conflict term sharing the weight A, leaving a vertex "
        "uncoloured costs one unit but saves two conflicts, so every optimum "
        "is a partial colouring.";
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
    c.instance = ColoringInstance(Graph(5, edges), 2);
    c.incorrect_formulation = Formulation::lucas;
    c.incorrect_weights = PenaltyWeights{1, 1, 1};
    c.corrected_weights = PenaltyWeights{5, 1, 1};
    c.exploit_labels = {var_label("x", 0, 0), var_label("x", 1, 0), var_label("x", 2, 1),
                        var_label("x", 3, 1)};
    // The best complete 2-colouring of K5 (3+2 split, four conflicts); spelt
    // out by labels because it is not domain-feasible.
    c.honest_solution = Coloring{{0, 0, 0, 1, 1}};
    c.honest_labels = std::vector<std::string>{var_label("x", 0, 0), var_label("x", 1, 0),
                                               var_label("x", 2, 0), var_label("x", 3, 1),
                                               var_label("x", 4, 1)};
    return c;
}

CounterexampleCase mst_case() {
    CounterexampleCase c;
    c.name = "mst-degree-slack";
    c.description =
        "Degree-2 spanning tree where the only legal tree must buy a very "
        "expensive edge. Without a one-hot constraint on the degree selector "
        "z, two selector bits sum to a degree above the cap, so the published "
        "model builds a star through the forbidden centre and keeps only "
        "cheap edges.";
    c.instance = DegreeMstInstance(
        WeightedGraph(5, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 4}}, {1, 1, 1, 1000000, 1}), 2);
    c.incorrect_formulation = Formulation::lucas;
    c.incorrect_weights = PenaltyWeights{1000001, 1, 1};
    c.corrected_weights = PenaltyWeights{1000001, 1, 1};
    c.exploit_labels = {
        var_label("xv", 0, 0),    var_label("xv", 1, 1),    var_label("xv", 2, 1),
        var_label("xv", 3, 1),    var_label("xv", 4, 2),    var_label("xe", 0, 1, 1),
        var_label("xe", 0, 2, 1), var_label("xe", 0, 3, 1), var_label("xe", 3, 4, 2),
        var_label("ye", 0, 1),    var_label("ye", 0, 2),    var_label("ye", 0, 3),
        var_label("ye", 3, 4),    var_label("z", 0, 1),     var_label("z", 0, 2),
        var_label("z", 1, 1),     var_label("z", 2, 1),     var_label("z", 3, 2),
        var_label("z", 4, 1)};
    c.honest_solution = RootedTree{std::nullopt, {{0, 1}, {0, 2}, {2, 4}, {3, 4}}};
    return c;
}

CounterexampleCase fvs_case() {
    CounterexampleCase c;
    c.name = "fvs-unmatched-arc-flag";
    c.description =
        "Feedback vertex set on a triangle. In the edge term as printed, an "
        "arc flag with no matching removed vertex cancels the coverage "
        "requirement, so keeping all three vertices plus one stray flag "
        "scores zero while the true optimum pays for one removal.";
    c.instance = FvsInstance(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    c.incorrect_formulation = Formulation::lucas;
    c.incorrect_weights = PenaltyWeights{2, 1, 1};
    c.corrected_weights = PenaltyWeights{5, 2, 1};
    c.exploit_labels = {var_label("xv", 0, 0),    var_label("xv", 1, 1),
                        var_label("xv", 2, 1),    var_label("xe", 0, 1, 1),
                        var_label("xe", 0, 2, 1), var_label("ye", 2, 1)};
    c.honest_solution = FeedbackVertexSet{{2}};
    return c;
}

CounterexampleCase fes_case() {
    CounterexampleCase c;
    c.name = "fes-double-height";
    c.description =
        "Feedback edge set on a 6-vertex digraph with one cycle. Giving a "
        "vertex a second height makes the closing arc look order-consistent "
        "at weight parity, so the published model keeps every arc at energy "
        "zero while every honest solution removes one.";
    c.instance = FesInstance(
        Digraph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 1}, {4, 5}, {5, 0}, {5, 1}}));
    c.incorrect_formulation = Formulation::lucas;
    c.incorrect_weights = PenaltyWeights{2, 1, 1};
    c.corrected_weights = PenaltyWeights{9, 2, 1};
    std::vector<std::string> honest = {
        var_label("xv", 5, 1),    var_label("xv", 0, 2),    var_label("xv", 3, 3),
        var_label("xv", 1, 4),    var_label("xv", 2, 5),    var_label("xv", 4, 6),
        var_label("ye", 0, 1),    var_label("ye", 0, 2),    var_label("ye", 0, 3),
        var_label("ye", 1, 4),    var_label("ye", 2, 4),    var_label("ye", 3, 1),
        var_label("ye", 5, 0),    var_label("ye", 5, 1),    var_label("xe", 0, 1, 2),
        var_label("xe", 0, 2, 2), var_label("xe", 0, 3, 2), var_label("xe", 1, 4, 4),
        var_label("xe", 2, 4, 5), var_label("xe", 3, 1, 3), var_label("xe", 5, 0, 1),
        var_label("xe", 5, 1, 1)};
    c.exploit_labels = honest;
    c.exploit_labels.push_back(var_label("xv", 1, 5));
    c.exploit_labels.push_back(var_label("ye", 4, 5));
    c.exploit_labels.push_back(var_label("xe", 4, 5, 2));
    c.honest_solution = FeedbackEdgeSet{{{4, 5}}};
    c.honest_labels = std::move(honest);
    return c;
}

// Sets every label that exists in the model, silently skipping the rest (the
// corrected models drop some of the published variables, e.g. the per-edge
// inclusion flags of the spanning tree model).
Assignment labels_where_present(const EncodedModel& em, const std::vector<std::string>& labels) {
    Assignment a(em.model.num_vars(), 0);
    for (const auto& label : labels)
        if (auto idx = em.registry.find(label)) a[*idx] = 1;
    return a;
}

}  // namespace

std::vector<CounterexampleCase> counterexample_catalog() {
    return {clique_case(), coloring_case(), mst_case(), fvs_case(), fes_case()};
}

EncodedModel build_incorrect_model(const CounterexampleCase& c) {
    const PenaltyWeights& w = c.incorrect_weights;
    if (const auto* p = std::get_if<CliqueInstance>(&c.instance)) {
        if (c.incorrect_formulation == Formulation::lucas_extended)
            return build_clique_lucas_extended(*p, w, c.options);
        return build_clique_lucas(*p, w, c.options);
    }
    if (const auto* p = std::get_if<ColoringInstance>(&c.instance))
        return build_coloring_lucas(*p, w, c.options);
    if (const auto* p = std::get_if<DegreeMstInstance>(&c.instance))
        return build_degree_mst_lucas(*p, w, c.options);
    if (const auto* p = std::get_if<SteinerInstance>(&c.instance))
        return build_steiner_lucas(*p, w, c.options);
    if (const auto* p = std::get_if<FvsInstance>(&c.instance)) {
        FvsVariant variant = c.incorrect_formulation == Formulation::lucas_symmetrized
                                 ? FvsVariant::symmetrized
                                 : FvsVariant::original;
        return build_fvs_lucas(*p, w, variant, c.options);
    }
    if (const auto* p = std::get_if<FesInstance>(&c.instance))
        return build_fes_lucas(*p, w, c.options);
    throw EncodingError("no as-published formulation is available for " +
                        problem_name(c.instance));
}

EncodedModel build_corrected_model(const CounterexampleCase& c) {
    return build_model(c.instance, c.corrected_weights, Formulation::corrected, c.options);
}

CaseVerification verify_case(const CounterexampleCase& c) {
    CaseVerification out;
    out.name = c.name;

    EncodedModel incorrect = build_incorrect_model(c);
    EncodedModel corrected = build_corrected_model(c);

    Assignment incorrect_exploit = assignment_from_labels(incorrect, c.exploit_labels);
    Assignment corrected_exploit = labels_where_present(corrected, c.exploit_labels);

    Assignment incorrect_honest, corrected_honest;
    if (c.honest_labels) {
        incorrect_honest = assignment_from_labels(incorrect, *c.honest_labels);
        corrected_honest = labels_where_present(corrected, *c.honest_labels);
    } else {
        incorrect_honest = canonical_encode(incorrect, c.honest_solution);
        corrected_honest = canonical_encode(corrected, c.honest_solution);
    }

    out.incorrect_exploit_energy = energy(incorrect.model, incorrect_exploit);
    out.incorrect_honest_energy = energy(incorrect.model, incorrect_honest);
    out.corrected_exploit_energy = energy(corrected.model, corrected_exploit);
    out.corrected_honest_energy = energy(corrected.model, corrected_honest);

    out.exploit_beats_honest_incorrect =
        out.incorrect_exploit_energy <= out.incorrect_honest_energy;
    out.exploit_decodes_infeasible = !decode(incorrect, incorrect_exploit).second.ok();
    out.corrected_blocks_exploit = out.corrected_exploit_energy > out.corrected_honest_energy;
    return out;
}

}  // namespace qubokit
