// Builders for the tree-structured encodings: spanning tree with a degree
// cap, Steiner tree, feedback vertex set and feedback edge set, each in the
// corrected form and in the as-published variants.
#include <string>
#include <utility>
#include <vector>

#include "qubokit/encoders.hpp"
#include "qubokit/lucas.hpp"

namespace qubokit {

namespace {

LinearExpr one_minus(const LinearExpr& e) {
    LinearExpr r = LinearExpr::constant(1);
    r -= e;
    return r;
}

void fail_if_inadmissible(const ProblemInstance& inst, const PenaltyWeights& w, Formulation f,
                          const EncodingOptions& opt) {
    if (!opt.check_weights) {
        if (w.a < 1 || w.b < 1 || w.c < 1)
            throw WeightError("penalty weights must be positive integers");
        return;
    }
    auto violations = validate_weights(inst, w, f, opt);
    if (violations.empty()) return;
    std::string msg = "inadmissible penalty weights for " + problem_name(inst) + ":";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw WeightError(msg);
}

// Depth-consistency penalty for one directed tree arc parent -> child at
// child depth i: xe * (2 - xv[parent, i-1] - xv[child, i]).
void add_arc_consistency(QuboModel& model, const VariableRegistry& reg, int parent, int child,
                         int depth, Coeff weight) {
    Index arc = reg.at(var_label("xe", parent, child, depth));
    LinearExpr ends = LinearExpr::constant(2);
    ends.add_term(reg.at(var_label("xv", parent, depth - 1)), -1);
    ends.add_term(reg.at(var_label("xv", child, depth)), -1);
    add_product_expr(model, LinearExpr::variable(arc), ends, weight);
}

// Sum of xe[u, child, i] over the neighbours u of child: the number of
// parents claiming the child at depth i.
LinearExpr parent_sum(const VariableRegistry& reg, const Graph& g, int child, int depth) {
    LinearExpr sum;
    for (int u : g.neighbors(child)) sum.add_term(reg.at(var_label("xe", u, child, depth)), 1);
    return sum;
}

// ---- Spanning tree with degree cap ----

EncodedModel build_degree_mst_impl(const DegreeMstInstance& inst, const PenaltyWeights& w,
                                   Formulation f, const EncodingOptions& options) {
    fail_if_inadmissible(inst, w, f, options);
    const Graph& g = inst.graph.graph;
    int n = g.num_vertices();
    int depth_bound = inst.depth_bound;
    int cap = inst.max_degree;
    bool edge_flags = (f == Formulation::lucas);

    VariableRegistry reg;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i <= depth_bound; ++i) reg.add(var_label("xv", v, i));
    if (edge_flags)
        for (const auto& [u, v] : g.edges()) reg.add(var_label("ye", u, v));
    for (const auto& [u, v] : g.edges()) {
        for (int i = 1; i <= depth_bound; ++i) reg.add(var_label("xe", u, v, i));
        for (int i = 1; i <= depth_bound; ++i) reg.add(var_label("xe", v, u, i));
    }
    for (int v = 0; v < n; ++v)
        for (int j = 1; j <= cap; ++j) reg.add(var_label("z", v, j));
    QuboModel model(static_cast<Index>(reg.size()));

    // Exactly one root.
    LinearExpr roots;
    for (int v = 0; v < n; ++v) roots.add_term(reg.at(var_label("xv", v, 0)), 1);
    add_square_expr(model, one_minus(roots), w.a);

    for (int v = 0; v < n; ++v) {
        // One depth per vertex.
        LinearExpr depths;
        for (int i = 0; i <= depth_bound; ++i) depths.add_term(reg.at(var_label("xv", v, i)), 1);
        add_square_expr(model, one_minus(depths), w.a);

        // One parent per non-root vertex, at the matching depth.
        for (int i = 1; i <= depth_bound; ++i) {
            LinearExpr claim = LinearExpr::variable(reg.at(var_label("xv", v, i)));
            claim -= parent_sum(reg, g, v, i);
            add_square_expr(model, claim, w.a);
        }

        // The degree selector matches the number of incident tree arcs. The
        // published variant leaves the selector free of a uniqueness term, so
        // several z bits can combine to fake a degree above the cap.
        LinearExpr selector;
        LinearExpr degree;
        for (int j = 1; j <= cap; ++j) selector.add_term(reg.at(var_label("z", v, j)), 1);
        if (!edge_flags) add_square_expr(model, one_minus(selector), w.a);
        for (int j = 1; j <= cap; ++j) degree.add_term(reg.at(var_label("z", v, j)), j);
        for (int u : g.neighbors(v))
            for (int i = 1; i <= depth_bound; ++i) {
                degree.add_term(reg.at(var_label("xe", u, v, i)), -1);
                degree.add_term(reg.at(var_label("xe", v, u, i)), -1);
            }
        add_square_expr(model, degree, w.a);
    }

    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        if (edge_flags) {
            // Redundant in-tree flag; it only mirrors the directed arc sum.
            LinearExpr match = LinearExpr::variable(reg.at(var_label("ye", u, v)));
            for (int i = 1; i <= depth_bound; ++i) {
                match.add_term(reg.at(var_label("xe", u, v, i)), -1);
                match.add_term(reg.at(var_label("xe", v, u, i)), -1);
            }
            add_square_expr(model, match, w.a);
        }
        Coeff cost = inst.graph.costs[e];
        for (int i = 1; i <= depth_bound; ++i) {
            add_arc_consistency(model, reg, u, v, i, w.a);
            add_arc_consistency(model, reg, v, u, i, w.a);
            model.add_linear(reg.at(var_label("xe", u, v, i)), checked_mul(w.b, cost));
            model.add_linear(reg.at(var_label("xe", v, u, i)), checked_mul(w.b, cost));
        }
    }

    return EncodedModel{std::move(model), std::move(reg), inst, w, f, options};
}

// ---- Steiner tree ----

EncodedModel build_steiner_impl(const SteinerInstance& inst, const PenaltyWeights& w,
                                Formulation f, const EncodingOptions& options) {
    fail_if_inadmissible(inst, w, f, options);
    const Graph& g = inst.graph.graph;
    int n = g.num_vertices();
    int depth_bound = inst.depth_bound;
    bool edge_flags = (f == Formulation::lucas);
    std::vector<bool> terminal(n, false);
    for (int t : inst.terminals) terminal[t] = true;

    VariableRegistry reg;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i <= depth_bound; ++i) reg.add(var_label("xv", v, i));
    for (int v = 0; v < n; ++v)
        if (!terminal[v]) reg.add(var_label("y", v));
    if (edge_flags)
        for (const auto& [u, v] : g.edges()) reg.add(var_label("ye", u, v));
    for (const auto& [u, v] : g.edges()) {
        for (int i = 1; i <= depth_bound; ++i) reg.add(var_label("xe", u, v, i));
        for (int i = 1; i <= depth_bound; ++i) reg.add(var_label("xe", v, u, i));
    }
    QuboModel model(static_cast<Index>(reg.size()));

    LinearExpr roots;
    for (int v = 0; v < n; ++v) roots.add_term(reg.at(var_label("xv", v, 0)), 1);
    add_square_expr(model, one_minus(roots), w.a);

    for (int v = 0; v < n; ++v) {
        // Terminals take exactly one depth; other vertices take one exactly
        // when their inclusion flag is set.
        LinearExpr depths;
        for (int i = 0; i <= depth_bound; ++i) depths.add_term(reg.at(var_label("xv", v, i)), 1);
        if (terminal[v]) {
            add_square_expr(model, one_minus(depths), w.a);
        } else {
            LinearExpr gap = LinearExpr::variable(reg.at(var_label("y", v)));
            gap -= depths;
            add_square_expr(model, gap, w.a);
        }

        for (int i = 1; i <= depth_bound; ++i) {
            LinearExpr claim = LinearExpr::variable(reg.at(var_label("xv", v, i)));
            claim -= parent_sum(reg, g, v, i);
            add_square_expr(model, claim, w.a);
        }
    }

    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        if (edge_flags) {
            LinearExpr match = LinearExpr::variable(reg.at(var_label("ye", u, v)));
            for (int i = 1; i <= depth_bound; ++i) {
                match.add_term(reg.at(var_label("xe", u, v, i)), -1);
                match.add_term(reg.at(var_label("xe", v, u, i)), -1);
            }
            add_square_expr(model, match, w.a);
        }
        Coeff cost = inst.graph.costs[e];
        for (int i = 1; i <= depth_bound; ++i) {
            add_arc_consistency(model, reg, u, v, i, w.a);
            add_arc_consistency(model, reg, v, u, i, w.a);
            model.add_linear(reg.at(var_label("xe", u, v, i)), checked_mul(w.b, cost));
            model.add_linear(reg.at(var_label("xe", v, u, i)), checked_mul(w.b, cost));
        }
    }

    return EncodedModel{std::move(model), std::move(reg), inst, w, f, options};
}

// ---- Feedback vertex set ----

enum class FvsForm { corrected, original, symmetrized };

EncodedModel build_fvs_impl(const FvsInstance& inst, const PenaltyWeights& w, FvsForm form,
                            const EncodingOptions& options) {
    Formulation f = form == FvsForm::corrected     ? Formulation::corrected
                    : form == FvsForm::original    ? Formulation::lucas
                                                   : Formulation::lucas_symmetrized;
    fail_if_inadmissible(inst, w, f, options);
    const Graph& g = inst.graph;
    int n = g.num_vertices();
    int depth_bound = inst.depth_bound;

    VariableRegistry reg;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i <= depth_bound; ++i) reg.add(var_label("xv", v, i));
    for (int v = 0; v < n; ++v) reg.add(var_label("y", v));
    for (const auto& [u, v] : g.edges()) {
        reg.add(var_label("ye", u, v));
        reg.add(var_label("ye", v, u));
    }
    for (const auto& [u, v] : g.edges()) {
        for (int i = 1; i <= depth_bound; ++i) reg.add(var_label("xe", u, v, i));
        for (int i = 1; i <= depth_bound; ++i) reg.add(var_label("xe", v, u, i));
    }
    QuboModel model(static_cast<Index>(reg.size()));

    for (int v = 0; v < n; ++v) {
        // Removed vertices have no depth in the remaining forest, kept
        // vertices exactly one.
        LinearExpr slots = LinearExpr::variable(reg.at(var_label("y", v)));
        for (int i = 0; i <= depth_bound; ++i) slots.add_term(reg.at(var_label("xv", v, i)), 1);
        add_square_expr(model, one_minus(slots), w.a);

        for (int i = 1; i <= depth_bound; ++i) {
            LinearExpr claim = LinearExpr::variable(reg.at(var_label("xv", v, i)));
            claim -= parent_sum(reg, g, v, i);
            add_square_expr(model, claim, w.a);
        }
    }

    for (const auto& [u, v] : g.edges()) {
        Index yuv = reg.at(var_label("ye", u, v));  // points towards v
        Index yvu = reg.at(var_label("ye", v, u));  // points towards u
        Index yu = reg.at(var_label("y", u));
        Index yv = reg.at(var_label("y", v));

        // Arc flags mirror the endpoint membership flags. The published form
        // constrains only the stored orientation, so the reverse flag is free
        // to silence the edge-spanning term without any vertex joining F.
        {
            LinearExpr fwd = LinearExpr::variable(yuv);
            fwd.add_term(yv, -1);
            add_square_expr(model, fwd, w.a);
        }
        if (form != FvsForm::original) {
            LinearExpr rev = LinearExpr::variable(yvu);
            rev.add_term(yu, -1);
            add_square_expr(model, rev, w.a);
        }

        LinearExpr span;
        for (int i = 1; i <= depth_bound; ++i) {
            span.add_term(reg.at(var_label("xe", u, v, i)), 1);
            span.add_term(reg.at(var_label("xe", v, u, i)), 1);
        }

        switch (form) {
            case FvsForm::original: {
                // As printed: the arc flags sit inside the depth sum and pick
                // up a factor depth_bound.
                LinearExpr inner = span;
                inner.add_term(yuv, depth_bound);
                inner.add_term(yvu, depth_bound);
                add_square_expr(model, one_minus(inner), w.a);
                break;
            }
            case FvsForm::symmetrized: {
                LinearExpr flagged = span;
                flagged.add_term(yuv, 1);
                flagged.add_term(yvu, 1);
                add_square_expr(model, one_minus(flagged), w.a);
                break;
            }
            case FvsForm::corrected: {
                // Linear replacement of the square: each edge contributes
                // B * (1 - (yuv + yvu - yuv*yvu) - span), which vanishes for
                // spanned edges and edges pointing into the feedback set, and
                // charges B for an edge left out entirely.
                model.add_offset(w.b);
                model.add_linear(yuv, -w.b);
                model.add_linear(yvu, -w.b);
                model.add_quadratic(yuv, yvu, w.b);
                for (const auto& [idx, coeff] : span.terms())
                    model.add_linear(idx, checked_mul(-w.b, coeff));
                break;
            }
        }

        for (int i = 1; i <= depth_bound; ++i) {
            add_arc_consistency(model, reg, u, v, i, w.a);
            add_arc_consistency(model, reg, v, u, i, w.a);
        }
    }

    Coeff membership_cost = (form == FvsForm::corrected) ? w.c : w.b;
    for (int v = 0; v < n; ++v) model.add_linear(reg.at(var_label("y", v)), membership_cost);

    return EncodedModel{std::move(model), std::move(reg), inst, w, f, options};
}

// ---- Feedback edge set ----

EncodedModel build_fes_impl(const FesInstance& inst, const PenaltyWeights& w, Formulation f,
                            const EncodingOptions& options) {
    if (f == Formulation::lucas && options.fes_no_arc_flags)
        throw EncodingError("dropping the arc flags applies to the corrected formulation only");
    fail_if_inadmissible(inst, w, f, options);
    const Digraph& g = inst.digraph;
    int n = g.num_vertices();
    bool arc_flags = !options.fes_no_arc_flags;

    VariableRegistry reg;
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= n; ++i) reg.add(var_label("xv", v, i));
    if (arc_flags)
        for (const auto& [u, v] : g.arcs()) reg.add(var_label("ye", u, v));
    for (const auto& [u, v] : g.arcs())
        for (int i = 1; i < n; ++i) reg.add(var_label("xe", u, v, i));
    QuboModel model(static_cast<Index>(reg.size()));

    for (int v = 0; v < n; ++v) {
        LinearExpr heights;
        for (int i = 1; i <= n; ++i) heights.add_term(reg.at(var_label("xv", v, i)), 1);
        add_square_expr(model, one_minus(heights), w.a);
    }

    // The published form keeps the height-order term inside H_A at weight A,
    // where assigning a vertex several heights turns it into a reward large
    // enough to pay for freeing the feedback arcs; the corrected form demotes
    // it to weight B under A > max_degree*B.
    Coeff order_weight = (f == Formulation::lucas) ? w.a : w.b;
    for (const auto& [u, v] : g.arcs()) {
        if (arc_flags) {
            LinearExpr match = LinearExpr::variable(reg.at(var_label("ye", u, v)));
            for (int i = 1; i < n; ++i) match.add_term(reg.at(var_label("xe", u, v, i)), -1);
            add_square_expr(model, match, w.a);
        }

        for (int i = 1; i < n; ++i) {
            // xe * (2 - xv[u, i] - sum of xv[v, j] over j > i)
            LinearExpr ends = LinearExpr::constant(2);
            ends.add_term(reg.at(var_label("xv", u, i)), -1);
            for (int j = i + 1; j <= n; ++j) ends.add_term(reg.at(var_label("xv", v, j)), -1);
            add_product_expr(model, LinearExpr::variable(reg.at(var_label("xe", u, v, i))), ends,
                             order_weight);
        }

        // Reward for keeping the arc out of the feedback set.
        Coeff keep = (f == Formulation::lucas) ? w.b : w.c;
        model.add_offset(keep);
        if (arc_flags) {
            model.add_linear(reg.at(var_label("ye", u, v)), -keep);
        } else {
            for (int i = 1; i < n; ++i)
                model.add_linear(reg.at(var_label("xe", u, v, i)), -keep);
        }
    }

    return EncodedModel{std::move(model), std::move(reg), inst, w, f, options};
}

}  // namespace

EncodedModel build_degree_mst(const DegreeMstInstance& inst, const PenaltyWeights& w,
                              const EncodingOptions& options) {
    return build_degree_mst_impl(inst, w, Formulation::corrected, options);
}

EncodedModel build_degree_mst_lucas(const DegreeMstInstance& inst, const PenaltyWeights& w,
                                    const EncodingOptions& options) {
    return build_degree_mst_impl(inst, w, Formulation::lucas, options);
}

EncodedModel build_steiner(const SteinerInstance& inst, const PenaltyWeights& w,
                           const EncodingOptions& options) {
    return build_steiner_impl(inst, w, Formulation::corrected, options);
}

EncodedModel build_steiner_lucas(const SteinerInstance& inst, const PenaltyWeights& w,
                                 const EncodingOptions& options) {
    return build_steiner_impl(inst, w, Formulation::lucas, options);
}

EncodedModel build_fvs(const FvsInstance& inst, const PenaltyWeights& w,
                       const EncodingOptions& options) {
    return build_fvs_impl(inst, w, FvsForm::corrected, options);
}

EncodedModel build_fvs_lucas(const FvsInstance& inst, const PenaltyWeights& w, FvsVariant variant,
                             const EncodingOptions& options) {
    return build_fvs_impl(inst, w,
                          variant == FvsVariant::original ? FvsForm::original
                                                          : FvsForm::symmetrized,
                          options);
}

EncodedModel build_fes(const FesInstance& inst, const PenaltyWeights& w,
                       const EncodingOptions& options) {
    return build_fes_impl(inst, w, Formulation::corrected, options);
}

EncodedModel build_fes_lucas(const FesInstance& inst, const PenaltyWeights& w,
                             const EncodingOptions& options) {
    return build_fes_impl(inst, w, Formulation::lucas, options);
}

}  // namespace qubokit
