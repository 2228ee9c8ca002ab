#include "qubokit/encoders.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "qubokit/lucas.hpp"

namespace qubokit {

namespace {

LinearExpr one_minus(const LinearExpr& e) {
    LinearExpr r = LinearExpr::constant(1);
    r -= e;
    return r;
}

std::string num(Coeff v) { return std::to_string(v); }

void check_positive(std::vector<std::string>& out, const PenaltyWeights& w, bool use_b,
                    bool use_c) {
    if (w.a < 1) out.push_back("A must be positive (A=" + num(w.a) + ")");
    if (use_b && w.b < 1) out.push_back("B must be positive (B=" + num(w.b) + ")");
    if (use_c && w.c < 1) out.push_back("C must be positive (C=" + num(w.c) + ")");
}

void require_strict(std::vector<std::string>& out, Coeff lhs, const std::string& lhs_name,
                    Coeff rhs, const std::string& rhs_name) {
    if (lhs <= rhs)
        out.push_back("requires " + lhs_name + " > " + rhs_name + " (" + lhs_name + "=" + num(lhs) +
                      ", " + rhs_name + "=" + num(rhs) + ")");
}

void require_admissible(const ProblemInstance& inst, const PenaltyWeights& w, Formulation f,
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

bool is_published_variant(Formulation f) { return f != Formulation::corrected; }

}  // namespace

std::vector<std::string> validate_weights(const ProblemInstance& instance, const PenaltyWeights& w,
                                          Formulation f, const EncodingOptions& options) {
    std::vector<std::string> out;
    bool published = is_published_variant(f);

    if (const auto* p = std::get_if<CliqueInstance>(&instance)) {
        Coeff delta = p->graph.max_degree();
        check_positive(out, w, true, true);
        require_strict(out, w.a, "A", checked_mul(delta, w.b), "max_degree*B");
        require_strict(out, checked_sub(w.a, checked_mul(delta, w.b)), "A - max_degree*B", w.c,
                       "C");
        if (!published) require_strict(out, w.b, "B", w.c, "C");
    } else if (const auto* p = std::get_if<ColoringInstance>(&instance)) {
        if (options.coloring_encoding == ColoringEncoding::single_bit) return out;
        if (published) {
            check_positive(out, w, false, false);
        } else {
            Coeff delta = p->graph.max_degree();
            check_positive(out, w, true, false);
            require_strict(out, w.a, "A", checked_mul(delta, w.b), "max_degree*B");
        }
    } else if (const auto* p = std::get_if<DegreeMstInstance>(&instance)) {
        check_positive(out, w, true, false);
        require_strict(out, w.a, "A", checked_mul(p->graph.max_cost(), w.b), "max_cost*B");
    } else if (const auto* p = std::get_if<SteinerInstance>(&instance)) {
        check_positive(out, w, true, false);
        if (published) {
            require_strict(out, w.a, "A", checked_mul(p->graph.max_cost(), w.b), "max_cost*B");
        } else {
            // Unlike the spanning tree, a violated terminal sheds not just its
            // own parent edge but every optional vertex strung below it, so A
            // must dominate the whole cost sum rather than one edge.
            Coeff total = 0;
            for (Coeff c : p->graph.costs) total = checked_add(total, c);
            require_strict(out, w.a, "A", checked_mul(total, w.b), "total_cost*B");
        }
    } else if (std::get_if<FvsInstance>(&instance) != nullptr) {
        if (published) {
            check_positive(out, w, true, false);
            require_strict(out, w.a, "A", w.b, "B");
        } else {
            check_positive(out, w, true, true);
            require_strict(out, w.a, "A", checked_add(w.b, checked_mul(2, w.c)), "B + 2*C");
            require_strict(out, w.b, "B", w.c, "C");
        }
    } else if (const auto* p = std::get_if<FesInstance>(&instance)) {
        if (published) {
            check_positive(out, w, true, false);
            require_strict(out, w.a, "A", w.b, "B");
        } else {
            Coeff delta = p->digraph.max_total_degree();
            check_positive(out, w, true, true);
            if (options.fes_no_arc_flags) {
                Coeff bound = checked_mul(checked_mul(p->digraph.num_vertices(), delta), w.b);
                require_strict(out, w.a, "A", bound, "N*max_degree*B");
            } else {
                require_strict(out, w.a, "A", checked_mul(delta, w.b), "max_degree*B");
            }
            require_strict(out, w.b, "B", w.c, "C");
        }
    } else if (std::get_if<BinPackingInstance>(&instance) != nullptr) {
        check_positive(out, w, true, false);
        require_strict(out, w.a, "A", checked_mul(2, w.b), "2*B");
    } else if (const auto* p = std::get_if<NumberPartitionInstance>(&instance)) {
        check_positive(out, w, true, false);
        Coeff smax = *std::max_element(p->values.begin(), p->values.end());
        Coeff bound = checked_mul(checked_mul(w.b, p->num_parts), checked_mul(smax, smax));
        require_strict(out, w.a, "A", bound, "B*num_parts*max_value^2");
    } else if (const auto* p = std::get_if<GraphPartitionInstance>(&instance)) {
        check_positive(out, w, true, true);
        Coeff m = p->num_parts;
        // Fixing a missing or doubled membership bit moves the cut term by at
        // most max_degree edges and the balance term by m-1 pairs, so A must
        // beat both together or leaving vertices out becomes optimal.
        Coeff drop = checked_add(checked_mul(w.b, m - 1),
                                 checked_mul(w.c, p->graph.max_degree()));
        require_strict(out, w.a, "A", drop, "B*(m-1) + C*max_degree");
        Coeff reach = std::min(checked_mul(m, p->graph.max_degree()),
                               static_cast<Coeff>(p->graph.num_vertices()));
        require_strict(out, checked_mul(w.b, checked_mul(m, m + 2)), "B*m*(m+2)",
                       checked_mul(w.c, reach), "C*min(m*max_degree, N)");
    } else if (std::get_if<SubsetSumInstance>(&instance) != nullptr) {
        // Weight-free model.
    } else if (const auto* p = std::get_if<N3dmInstance>(&instance)) {
        check_positive(out, w, true, false);
        Coeff bound = 0;
        for (const auto* list : {&p->xs, &p->ys, &p->zs}) {
            Coeff mx = *std::max_element(list->begin(), list->end());
            bound = checked_add(bound, checked_mul(mx, mx));
        }
        require_strict(out, w.a, "A", checked_mul(w.b, bound), "B*(sum of max value^2)");
    }
    return out;
}

PenaltyWeights default_weights(const ProblemInstance& instance, Formulation f,
                               const EncodingOptions& options) {
    bool published = is_published_variant(f);
    PenaltyWeights w;

    if (const auto* p = std::get_if<CliqueInstance>(&instance)) {
        Coeff delta = p->graph.max_degree();
        w.c = 1;
        w.b = published ? 1 : 2;
        w.a = checked_add(checked_mul(delta, w.b), w.c + 1);
    } else if (const auto* p = std::get_if<ColoringInstance>(&instance)) {
        if (!published && options.coloring_encoding == ColoringEncoding::one_hot) {
            w.b = 1;
            w.a = checked_add(static_cast<Coeff>(p->graph.max_degree()), 1);
        }
    } else if (const auto* p = std::get_if<DegreeMstInstance>(&instance)) {
        w.b = 1;
        w.a = checked_add(p->graph.max_cost(), 1);
    } else if (const auto* p = std::get_if<SteinerInstance>(&instance)) {
        w.b = 1;
        if (published) {
            w.a = checked_add(p->graph.max_cost(), 1);
        } else {
            Coeff total = 0;
            for (Coeff c : p->graph.costs) total = checked_add(total, c);
            w.a = checked_add(checked_mul(total, w.b), 1);
        }
    } else if (std::get_if<FvsInstance>(&instance) != nullptr) {
        w.c = 1;
        w.b = published ? 1 : 2;
        w.a = published ? 2 : checked_add(w.b, 2 * w.c + 1);
    } else if (const auto* p = std::get_if<FesInstance>(&instance)) {
        w.c = 1;
        w.b = published ? 1 : 2;
        if (published) {
            w.a = 2;
        } else {
            Coeff delta = p->digraph.max_total_degree();
            Coeff bound = options.fes_no_arc_flags
                              ? checked_mul(checked_mul(p->digraph.num_vertices(), delta), w.b)
                              : checked_mul(delta, w.b);
            w.a = checked_add(bound, 1);
        }
    } else if (std::get_if<BinPackingInstance>(&instance) != nullptr) {
        w.b = 1;
        w.a = 3;
    } else if (const auto* p = std::get_if<NumberPartitionInstance>(&instance)) {
        w.b = 1;
        Coeff smax = *std::max_element(p->values.begin(), p->values.end());
        w.a = checked_add(checked_mul(static_cast<Coeff>(p->num_parts), checked_mul(smax, smax)),
                          1);
    } else if (const auto* p = std::get_if<GraphPartitionInstance>(&instance)) {
        w.c = 1;
        Coeff m = p->num_parts;
        Coeff reach = std::min(checked_mul(m, p->graph.max_degree()),
                               static_cast<Coeff>(p->graph.num_vertices()));
        w.b = checked_mul(w.c, reach) / (m * (m + 2)) + 1;
        w.a = checked_add(checked_add(checked_mul(w.b, m - 1),
                                      checked_mul(w.c, p->graph.max_degree())),
                          1);
    } else if (const auto* p = std::get_if<N3dmInstance>(&instance)) {
        w.b = 1;
        Coeff bound = 0;
        for (const auto* list : {&p->xs, &p->ys, &p->zs}) {
            Coeff mx = *std::max_element(list->begin(), list->end());
            bound = checked_add(bound, checked_mul(mx, mx));
        }
        w.a = checked_add(checked_mul(w.b, bound), 1);
    }
    // Subset sum keeps the weight-free default {1, 1, 1}.
    return w;
}

// ---- Clique ----

namespace {

// Shared core: `sizes` lists the representable clique sizes for the one-hot
// selector; the corrected range reaches max_degree + 1, the published one
// stops at max_degree.
EncodedModel build_clique_onehot(const CliqueInstance& inst, const PenaltyWeights& w,
                                 Formulation f, const EncodingOptions& options) {
    require_admissible(inst, w, f, options);
    const Graph& g = inst.graph;
    int max_size = g.max_degree() + (f == Formulation::lucas ? 0 : 1);
    if (max_size < 2)
        throw EncodingError("clique size selector is empty: no representable size in {2..." +
                            std::to_string(max_size) + "}");

    VariableRegistry reg;
    for (int v = 0; v < g.num_vertices(); ++v) reg.add(var_label("x", v));
    for (int i = 2; i <= max_size; ++i) reg.add(var_label("y", i));
    QuboModel model(static_cast<Index>(reg.size()));

    LinearExpr count;
    LinearExpr size;
    for (int i = 2; i <= max_size; ++i) {
        Index yi = reg.at(var_label("y", i));
        count.add_term(yi, 1);
        size.add_term(yi, i);
    }
    LinearExpr vertex_sum;
    for (int v = 0; v < g.num_vertices(); ++v) vertex_sum.add_term(reg.at(var_label("x", v)), 1);

    add_square_expr(model, one_minus(count), w.a);
    LinearExpr mismatch = size;
    mismatch -= vertex_sum;
    add_square_expr(model, mismatch, w.a);

    // B * [ size*(size-1)/2 - (edges inside the selection) ]
    LinearExpr size_minus_one = size;
    size_minus_one.add_constant(-1);
    add_half_product_expr(model, size, size_minus_one, w.b);
    for (const auto& [u, v] : g.edges())
        model.add_quadratic(reg.at(var_label("x", u)), reg.at(var_label("x", v)), -w.b);

    for (int v = 0; v < g.num_vertices(); ++v) model.add_linear(reg.at(var_label("x", v)), -w.c);

    return EncodedModel{std::move(model), std::move(reg), inst, w, f, options};
}

EncodedModel build_clique_binary(const CliqueInstance& inst, const PenaltyWeights& w,
                                 const EncodingOptions& options) {
    require_admissible(inst, w, Formulation::corrected, options);
    const Graph& g = inst.graph;
    int delta = g.max_degree();
    // Size value is 2 + sum(2^i y_i, i < m) + (delta + 1 - 2^m) y_m, covering
    // {2 .. delta + 2}; the one-extra top value costs at least B - C > 0 so it
    // never wins. No uniqueness term is needed for this encoding.
    int m = std::bit_width(static_cast<unsigned>(delta + 1)) - 1;
    Coeff top_coeff = static_cast<Coeff>(delta + 1) - (Coeff{1} << m);

    VariableRegistry reg;
    for (int v = 0; v < g.num_vertices(); ++v) reg.add(var_label("x", v));
    for (int i = 0; i <= m; ++i) reg.add(var_label("y", i));
    QuboModel model(static_cast<Index>(reg.size()));

    LinearExpr size = LinearExpr::constant(2);
    for (int i = 0; i < m; ++i) size.add_term(reg.at(var_label("y", i)), Coeff{1} << i);
    size.add_term(reg.at(var_label("y", m)), top_coeff);

    LinearExpr mismatch = size;
    for (int v = 0; v < g.num_vertices(); ++v) mismatch.add_term(reg.at(var_label("x", v)), -1);
    add_square_expr(model, mismatch, w.a);

    LinearExpr size_minus_one = size;
    size_minus_one.add_constant(-1);
    add_half_product_expr(model, size, size_minus_one, w.b);
    for (const auto& [u, v] : g.edges())
        model.add_quadratic(reg.at(var_label("x", u)), reg.at(var_label("x", v)), -w.b);

    for (int v = 0; v < g.num_vertices(); ++v) model.add_linear(reg.at(var_label("x", v)), -w.c);

    EncodingOptions opt = options;
    opt.clique_encoding = CliqueEncoding::binary;
    return EncodedModel{std::move(model), std::move(reg), inst, w, Formulation::corrected, opt};
}

}  // namespace

EncodedModel build_clique(const CliqueInstance& inst, const PenaltyWeights& w,
                          const EncodingOptions& options) {
    if (options.clique_encoding == CliqueEncoding::binary)
        return build_clique_binary(inst, w, options);
    return build_clique_onehot(inst, w, Formulation::corrected, options);
}

EncodedModel build_clique_lucas(const CliqueInstance& inst, const PenaltyWeights& w,
                                const EncodingOptions& options) {
    if (options.clique_encoding == CliqueEncoding::binary)
        throw EncodingError("the binary size encoding applies to the corrected formulation only");
    return build_clique_onehot(inst, w, Formulation::lucas, options);
}

EncodedModel build_clique_lucas_extended(const CliqueInstance& inst, const PenaltyWeights& w,
                                         const EncodingOptions& options) {
    if (options.clique_encoding == CliqueEncoding::binary)
        throw EncodingError("the binary size encoding applies to the corrected formulation only");
    return build_clique_onehot(inst, w, Formulation::lucas_extended, options);
}

// ---- Graph colouring ----

namespace {

EncodedModel build_coloring_impl(const ColoringInstance& inst, const PenaltyWeights& w,
                                 Formulation f, const EncodingOptions& options) {
    require_admissible(inst, w, f, options);
    const Graph& g = inst.graph;
    int n = inst.num_colors;

    VariableRegistry reg;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int c = 0; c < n; ++c) reg.add(var_label("x", v, c));
    QuboModel model(static_cast<Index>(reg.size()));

    for (int v = 0; v < g.num_vertices(); ++v) {
        LinearExpr one_hot;
        for (int c = 0; c < n; ++c) one_hot.add_term(reg.at(var_label("x", v, c)), 1);
        add_square_expr(model, one_minus(one_hot), w.a);
    }
    // The published form weighs the conflict term with A as well, which lets
    // an uncoloured vertex pay one A to cancel up to max_degree conflicts.
    Coeff conflict = (f == Formulation::lucas) ? w.a : w.b;
    for (const auto& [u, v] : g.edges())
        for (int c = 0; c < n; ++c)
            model.add_quadratic(reg.at(var_label("x", u, c)), reg.at(var_label("x", v, c)),
                                conflict);

    return EncodedModel{std::move(model), std::move(reg), inst, w, f, options};
}

}  // namespace

EncodedModel build_coloring(const ColoringInstance& inst, const PenaltyWeights& w,
                            const EncodingOptions& options) {
    if (options.coloring_encoding == ColoringEncoding::single_bit)
        throw EncodingError("the single-bit colouring encoding is built via build_two_coloring");
    return build_coloring_impl(inst, w, Formulation::corrected, options);
}

EncodedModel build_coloring_lucas(const ColoringInstance& inst, const PenaltyWeights& w,
                                  const EncodingOptions& options) {
    if (options.coloring_encoding == ColoringEncoding::single_bit)
        throw EncodingError("the single-bit colouring encoding is built via build_two_coloring");
    return build_coloring_impl(inst, w, Formulation::lucas, options);
}

EncodedModel build_two_coloring(const Graph& graph) {
    ColoringInstance inst(graph, 2);
    VariableRegistry reg;
    for (int v = 0; v < graph.num_vertices(); ++v) reg.add(var_label("x", v));
    QuboModel model(static_cast<Index>(reg.size()));

    // Each improperly coloured edge contributes 1 - x_u - x_v + 2 x_u x_v.
    for (const auto& [u, v] : graph.edges()) {
        Index iu = reg.at(var_label("x", u));
        Index iv = reg.at(var_label("x", v));
        model.add_offset(1);
        model.add_linear(iu, -1);
        model.add_linear(iv, -1);
        model.add_quadratic(iu, iv, 2);
    }

    EncodingOptions opt;
    opt.coloring_encoding = ColoringEncoding::single_bit;
    return EncodedModel{std::move(model), std::move(reg), inst, PenaltyWeights{},
                        Formulation::corrected, opt};
}

// ---- Bin packing ----

EncodedModel build_bin_packing(const BinPackingInstance& inst, const PenaltyWeights& w,
                               const EncodingOptions& options) {
    require_admissible(inst, w, Formulation::corrected, options);
    int bins = inst.num_bins;
    int objects = static_cast<int>(inst.item_weights.size());
    Coeff cap = inst.capacity;

    VariableRegistry reg;
    for (int i = 0; i < bins; ++i)
        for (int j = 0; j < objects; ++j) reg.add(var_label("x", i, j));
    for (int i = 0; i < bins; ++i) reg.add(var_label("x", i));
    for (int i = 0; i < bins; ++i)
        for (Coeff k = 1; k <= cap; ++k) reg.add(var_label("y", i, static_cast<int>(k)));
    QuboModel model(static_cast<Index>(reg.size()));

    for (int i = 0; i < bins; ++i) {
        Index used = reg.at(var_label("x", i));

        // Used bins are filled to exactly one level, unused bins to none.
        LinearExpr level_choice = LinearExpr::variable(used);
        LinearExpr level_value;
        for (Coeff k = 1; k <= cap; ++k) {
            Index y = reg.at(var_label("y", i, static_cast<int>(k)));
            level_choice.add_term(y, -1);
            level_value.add_term(y, k);
        }
        add_square_expr(model, level_choice, w.a);

        // The chosen level matches the total weight placed in the bin.
        LinearExpr placed;
        for (int j = 0; j < objects; ++j)
            placed.add_term(reg.at(var_label("x", i, j)), inst.item_weights[j]);
        LinearExpr level_match = level_value;
        level_match -= placed;
        add_square_expr(model, level_match, w.a);

        // A bin holding objects must be flagged as used.
        LinearExpr count;
        for (int j = 0; j < objects; ++j) count.add_term(reg.at(var_label("x", i, j)), 1);
        add_product_expr(model, one_minus(LinearExpr::variable(used)), count, w.a);

        model.add_linear(used, w.b);
    }

    for (int j = 0; j < objects; ++j) {
        LinearExpr placement;
        for (int i = 0; i < bins; ++i) placement.add_term(reg.at(var_label("x", i, j)), 1);
        add_square_expr(model, one_minus(placement), w.a);
    }

    return EncodedModel{std::move(model), std::move(reg), inst, w, Formulation::corrected,
                        options};
}

// ---- Partitioning ----

EncodedModel build_number_partition(const NumberPartitionInstance& inst, const PenaltyWeights& w,
                                    const EncodingOptions& options) {
    require_admissible(inst, w, Formulation::corrected, options);
    int n = static_cast<int>(inst.values.size());
    int m = inst.num_parts;

    VariableRegistry reg;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) reg.add(var_label("x", i, j));
    QuboModel model(static_cast<Index>(reg.size()));

    for (int i = 0; i < n; ++i) {
        LinearExpr membership;
        for (int j = 0; j < m; ++j) membership.add_term(reg.at(var_label("x", i, j)), 1);
        add_square_expr(model, one_minus(membership), w.a);
    }

    std::vector<LinearExpr> part_sum(m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i)
            part_sum[j].add_term(reg.at(var_label("x", i, j)), inst.values[i]);
    for (int j1 = 0; j1 < m; ++j1)
        for (int j2 = j1 + 1; j2 < m; ++j2) {
            LinearExpr diff = part_sum[j1];
            diff -= part_sum[j2];
            add_square_expr(model, diff, w.b);
        }

    return EncodedModel{std::move(model), std::move(reg), inst, w, Formulation::corrected,
                        options};
}

EncodedModel build_graph_partition(const GraphPartitionInstance& inst, const PenaltyWeights& w,
                                   const EncodingOptions& options) {
    require_admissible(inst, w, Formulation::corrected, options);
    int n = inst.graph.num_vertices();
    int m = inst.num_parts;

    VariableRegistry reg;
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < m; ++j) reg.add(var_label("x", v, j));
    QuboModel model(static_cast<Index>(reg.size()));

    for (int v = 0; v < n; ++v) {
        LinearExpr membership;
        for (int j = 0; j < m; ++j) membership.add_term(reg.at(var_label("x", v, j)), 1);
        add_square_expr(model, one_minus(membership), w.a);
    }

    std::vector<LinearExpr> part_size(m);
    for (int j = 0; j < m; ++j)
        for (int v = 0; v < n; ++v) part_size[j].add_term(reg.at(var_label("x", v, j)), 1);
    for (int j1 = 0; j1 < m; ++j1)
        for (int j2 = j1 + 1; j2 < m; ++j2) {
            LinearExpr diff = part_size[j1];
            diff -= part_size[j2];
            add_square_expr(model, diff, w.b);
        }

    // Each edge crossing parts contributes 2C in total.
    for (int j = 0; j < m; ++j)
        for (const auto& [u, v] : inst.graph.edges()) {
            Index iu = reg.at(var_label("x", u, j));
            Index iv = reg.at(var_label("x", v, j));
            model.add_linear(iu, w.c);
            model.add_linear(iv, w.c);
            model.add_quadratic(iu, iv, checked_mul(-2, w.c));
        }

    return EncodedModel{std::move(model), std::move(reg), inst, w, Formulation::corrected,
                        options};
}

EncodedModel build_subset_sum(const SubsetSumInstance& inst) {
    VariableRegistry reg;
    int n = static_cast<int>(inst.values.size());
    for (int i = 0; i < n; ++i) reg.add(var_label("x", i));
    QuboModel model(static_cast<Index>(reg.size()));

    LinearExpr total = LinearExpr::constant(-inst.target);
    for (int i = 0; i < n; ++i) total.add_term(reg.at(var_label("x", i)), inst.values[i]);
    add_square_expr(model, total, 1);

    return EncodedModel{std::move(model), std::move(reg), inst, PenaltyWeights{},
                        Formulation::corrected, EncodingOptions{}};
}

// ---- Numerical three-dimensional matching ----

EncodedModel build_n3dm(const N3dmInstance& inst, const PenaltyWeights& w,
                        const EncodingOptions& options) {
    require_admissible(inst, w, Formulation::corrected, options);
    int n = static_cast<int>(inst.xs.size());
    const char* families[3] = {"x", "y", "z"};
    const std::vector<Coeff>* values[3] = {&inst.xs, &inst.ys, &inst.zs};

    VariableRegistry reg;
    for (const char* fam : families)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) reg.add(var_label(fam, i, j));
    QuboModel model(static_cast<Index>(reg.size()));

    for (const char* fam : families) {
        for (int i = 0; i < n; ++i) {
            LinearExpr row;
            for (int j = 0; j < n; ++j) row.add_term(reg.at(var_label(fam, i, j)), 1);
            add_square_expr(model, one_minus(row), w.a);
        }
        for (int j = 0; j < n; ++j) {
            LinearExpr column;
            for (int i = 0; i < n; ++i) column.add_term(reg.at(var_label(fam, i, j)), 1);
            add_square_expr(model, one_minus(column), w.a);
        }
    }

    for (int j = 0; j < n; ++j) {
        LinearExpr triple_sum = LinearExpr::constant(-inst.target);
        for (int f = 0; f < 3; ++f)
            for (int i = 0; i < n; ++i)
                triple_sum.add_term(reg.at(var_label(families[f], i, j)), (*values[f])[i]);
        add_square_expr(model, triple_sum, w.b);
    }

    return EncodedModel{std::move(model), std::move(reg), inst, w, Formulation::corrected,
                        options};
}

// ---- Dispatch ----

EncodedModel build_model(const ProblemInstance& instance, const PenaltyWeights& w, Formulation f,
                         const EncodingOptions& options) {
    if (const auto* p = std::get_if<CliqueInstance>(&instance)) {
        switch (f) {
            case Formulation::corrected: return build_clique(*p, w, options);
            case Formulation::lucas: return build_clique_lucas(*p, w, options);
            case Formulation::lucas_extended: return build_clique_lucas_extended(*p, w, options);
            default: break;
        }
    } else if (const auto* p = std::get_if<ColoringInstance>(&instance)) {
        if (options.coloring_encoding == ColoringEncoding::single_bit) {
            if (f == Formulation::corrected && p->num_colors == 2)
                return build_two_coloring(p->graph);
            throw EncodingError("the single-bit encoding requires the corrected two-colour model");
        }
        if (f == Formulation::corrected) return build_coloring(*p, w, options);
        if (f == Formulation::lucas) return build_coloring_lucas(*p, w, options);
    } else if (const auto* p = std::get_if<DegreeMstInstance>(&instance)) {
        if (f == Formulation::corrected) return build_degree_mst(*p, w, options);
        if (f == Formulation::lucas) return build_degree_mst_lucas(*p, w, options);
    } else if (const auto* p = std::get_if<SteinerInstance>(&instance)) {
        if (f == Formulation::corrected) return build_steiner(*p, w, options);
        if (f == Formulation::lucas) return build_steiner_lucas(*p, w, options);
    } else if (const auto* p = std::get_if<FvsInstance>(&instance)) {
        if (f == Formulation::corrected) return build_fvs(*p, w, options);
        if (f == Formulation::lucas) return build_fvs_lucas(*p, w, FvsVariant::original, options);
        if (f == Formulation::lucas_symmetrized)
            return build_fvs_lucas(*p, w, FvsVariant::symmetrized, options);
    } else if (const auto* p = std::get_if<FesInstance>(&instance)) {
        if (f == Formulation::corrected) return build_fes(*p, w, options);
        if (f == Formulation::lucas) return build_fes_lucas(*p, w, options);
    } else if (f == Formulation::corrected) {
        if (const auto* b = std::get_if<BinPackingInstance>(&instance))
            return build_bin_packing(*b, w, options);
        if (const auto* b = std::get_if<NumberPartitionInstance>(&instance))
            return build_number_partition(*b, w, options);
        if (const auto* b = std::get_if<GraphPartitionInstance>(&instance))
            return build_graph_partition(*b, w, options);
        if (const auto* b = std::get_if<SubsetSumInstance>(&instance)) return build_subset_sum(*b);
        if (const auto* b = std::get_if<N3dmInstance>(&instance)) return build_n3dm(*b, w, options);
    }
    throw EncodingError("no " + std::string(f == Formulation::corrected ? "corrected" :
                                            "as-published") +
                        " formulation is available for " + problem_name(instance));
}

Assignment assignment_from_labels(const EncodedModel& em, const std::vector<std::string>& labels) {
    Assignment a(em.model.num_vars(), 0);
    for (const auto& label : labels) a[em.registry.at(label)] = 1;
    return a;
}

}  // namespace qubokit
