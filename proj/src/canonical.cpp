// Canonical assignments for feasible solutions, decoding of arbitrary
// assignments back to domain solutions, and the closed-form energy of a
// canonically encoded solution.
#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qubokit/encoders.hpp"
#include "tree_util.hpp"

namespace qubokit {

namespace {

void set_label(Assignment& a, const EncodedModel& em, const std::string& label) {
    a[em.registry.at(label)] = 1;
}

bool bit(const Assignment& a, const EncodedModel& em, const std::string& label) {
    return a[em.registry.at(label)] != 0;
}

bool is_published(const EncodedModel& em) { return em.formulation != Formulation::corrected; }

// ---- Encoding ----

void encode_clique(const EncodedModel& em, const CliqueInstance& inst, const CliqueSet& sol,
                   Assignment& a) {
    int k = static_cast<int>(sol.vertices.size());
    int delta = inst.graph.max_degree();
    for (int v : sol.vertices) set_label(a, em, var_label("x", v));

    if (em.options.clique_encoding == CliqueEncoding::one_hot) {
        int max_size = delta + (em.formulation == Formulation::lucas ? 0 : 1);
        if (k < 2 || k > max_size)
            throw EncodingError("clique size " + std::to_string(k) +
                                " is outside the representable range {2..." +
                                std::to_string(max_size) + "}");
        set_label(a, em, var_label("y", k));
    } else {
        if (k < 2)
            throw EncodingError("clique size " + std::to_string(k) +
                                " is outside the representable range");
        int m = std::bit_width(static_cast<unsigned>(delta + 1)) - 1;
        Coeff top_coeff = static_cast<Coeff>(delta + 1) - (Coeff{1} << m);
        Coeff rest = k - 2;
        if (rest >= (Coeff{1} << m)) {
            set_label(a, em, var_label("y", m));
            rest -= top_coeff;
        }
        for (int i = 0; i < m; ++i)
            if ((rest >> i) & 1) set_label(a, em, var_label("y", i));
    }
}

void encode_coloring(const EncodedModel& em, const Coloring& sol, Assignment& a) {
    if (em.options.coloring_encoding == ColoringEncoding::single_bit) {
        for (std::size_t v = 0; v < sol.color_of.size(); ++v)
            if (*sol.color_of[v] == 1) set_label(a, em, var_label("x", static_cast<int>(v)));
        return;
    }
    for (std::size_t v = 0; v < sol.color_of.size(); ++v)
        set_label(a, em, var_label("x", static_cast<int>(v), *sol.color_of[v]));
}

// Roots the tree at the solution's root (or a centre vertex), assigns BFS
// depths, and sets the depth, arc and membership bits shared by the spanning
// tree encodings. Returns the depth map.
std::map<int, int> encode_rooted_tree(const EncodedModel& em, const RootedTree& sol,
                                      const std::set<int>& covered, int depth_bound,
                                      bool edge_flags, Assignment& a) {
    auto adj = detail::adjacency_of(sol.edges);
    int root;
    if (sol.root) {
        root = *sol.root;
        if (!covered.count(root))
            throw EncodingError("root " + std::to_string(root) + " is not a tree vertex");
    } else {
        root = detail::tree_centre(covered, adj);
    }
    auto depth = detail::bfs_depths(adj, root);
    for (int v : covered)
        if (!depth.count(v))
            throw EncodingError("tree does not reach vertex " + std::to_string(v) +
                                " from the root");
    for (const auto& [v, d] : depth) {
        if (d > depth_bound)
            throw EncodingError("vertex " + std::to_string(v) + " needs depth " +
                                std::to_string(d) + " beyond the bound " +
                                std::to_string(depth_bound));
        set_label(a, em, var_label("xv", v, d));
    }
    for (const auto& [u, v] : sol.edges) {
        int parent = depth.at(u) < depth.at(v) ? u : v;
        int child = (parent == u) ? v : u;
        set_label(a, em, var_label("xe", parent, child, depth.at(child)));
        if (edge_flags) set_label(a, em, var_label("ye", u, v));
    }
    return depth;
}

void encode_mst(const EncodedModel& em, const DegreeMstInstance& inst, const RootedTree& sol,
                Assignment& a) {
    std::set<int> covered;
    for (int v = 0; v < inst.graph.graph.num_vertices(); ++v) covered.insert(v);
    encode_rooted_tree(em, sol, covered, inst.depth_bound, is_published(em), a);
    auto adj = detail::adjacency_of(sol.edges);
    for (int v : covered)
        set_label(a, em, var_label("z", v, static_cast<int>(adj.at(v).size())));
}

void encode_steiner(const EncodedModel& em, const SteinerInstance& inst, const RootedTree& sol,
                    Assignment& a) {
    std::set<int> covered;
    for (const auto& [u, v] : sol.edges) {
        covered.insert(u);
        covered.insert(v);
    }
    encode_rooted_tree(em, sol, covered, inst.depth_bound, is_published(em), a);
    std::set<int> terminal(inst.terminals.begin(), inst.terminals.end());
    for (int v : covered)
        if (!terminal.count(v)) set_label(a, em, var_label("y", v));
}

void encode_fvs(const EncodedModel& em, const FvsInstance& inst, const FeedbackVertexSet& sol,
                Assignment& a) {
    const Graph& g = inst.graph;
    int n = g.num_vertices();
    std::vector<bool> removed(n, false);
    for (int v : sol.vertices) {
        removed[v] = true;
        set_label(a, em, var_label("y", v));
    }
    detail::EdgeList kept_edges;
    for (const auto& [u, v] : g.edges()) {
        if (removed[v]) set_label(a, em, var_label("ye", u, v));
        if (removed[u]) set_label(a, em, var_label("ye", v, u));
        if (!removed[u] && !removed[v]) kept_edges.emplace_back(u, v);
    }

    // Root each remaining component at its centre; the remaining graph is a
    // forest, so BFS depths orient every kept edge.
    auto adj = detail::adjacency_of(kept_edges);
    std::map<int, int> depth;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (removed[s] || seen[s]) continue;
        std::set<int> component{s};
        std::vector<int> frontier{s};
        seen[s] = true;
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            auto it = adj.find(v);
            if (it == adj.end()) continue;
            for (int u : it->second)
                if (!seen[u]) {
                    seen[u] = true;
                    component.insert(u);
                    frontier.push_back(u);
                }
        }
        int centre = detail::tree_centre(component, adj);
        for (const auto& [v, d] : detail::bfs_depths(adj, centre)) {
            if (!component.count(v)) continue;
            if (d > inst.depth_bound)
                throw EncodingError("vertex " + std::to_string(v) + " needs depth " +
                                    std::to_string(d) + " beyond the bound " +
                                    std::to_string(inst.depth_bound));
            depth[v] = d;
            set_label(a, em, var_label("xv", v, d));
        }
    }
    for (const auto& [u, v] : kept_edges) {
        int parent = depth.at(u) < depth.at(v) ? u : v;
        int child = (parent == u) ? v : u;
        set_label(a, em, var_label("xe", parent, child, depth.at(child)));
    }
}

void encode_fes(const EncodedModel& em, const FesInstance& inst, const FeedbackEdgeSet& sol,
                Assignment& a) {
    const Digraph& g = inst.digraph;
    int n = g.num_vertices();
    std::set<std::pair<int, int>> removed(sol.arcs.begin(), sol.arcs.end());

    // Peel the remaining acyclic digraph: repeatedly take the lowest-index
    // vertex with no remaining incoming arc and give it the next height.
    std::vector<int> indegree(n, 0);
    for (const auto& arc : g.arcs())
        if (!removed.count(arc)) ++indegree[arc.second];
    std::vector<int> height(n, 0);
    std::vector<bool> placed(n, false);
    for (int h = 1; h <= n; ++h) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[v] && indegree[v] == 0) {
                pick = v;
                break;
            }
        if (pick < 0)
            throw EncodingError("remaining arcs contain a cycle; heights cannot be assigned");
        placed[pick] = true;
        height[pick] = h;
        set_label(a, em, var_label("xv", pick, h));
        for (const auto& [u, v] : g.arcs())
            if (u == pick && !removed.count({u, v})) --indegree[v];
    }

    for (const auto& [u, v] : g.arcs()) {
        if (removed.count({u, v})) continue;
        if (!em.options.fes_no_arc_flags) set_label(a, em, var_label("ye", u, v));
        set_label(a, em, var_label("xe", u, v, height[u]));
    }
}

void encode_bins(const EncodedModel& em, const BinPackingInstance& inst, const BinAssignment& sol,
                 Assignment& a) {
    std::vector<Coeff> load(inst.num_bins, 0);
    for (std::size_t j = 0; j < sol.bin_of.size(); ++j) {
        int i = *sol.bin_of[j];
        set_label(a, em, var_label("x", i, static_cast<int>(j)));
        load[i] += inst.item_weights[j];
    }
    for (int i = 0; i < inst.num_bins; ++i) {
        if (load[i] == 0) continue;
        set_label(a, em, var_label("x", i));
        set_label(a, em, var_label("y", i, static_cast<int>(load[i])));
    }
}

void encode_partition(const EncodedModel& em, const Partition& sol, Assignment& a) {
    for (std::size_t i = 0; i < sol.part_of.size(); ++i)
        set_label(a, em, var_label("x", static_cast<int>(i), *sol.part_of[i]));
}

void encode_subset(const EncodedModel& em, const SubsetSelection& sol, Assignment& a) {
    for (int i : sol.indices) set_label(a, em, var_label("x", i));
}

void encode_n3dm(const EncodedModel& em, const TripleMatching& sol, Assignment& a) {
    for (std::size_t j = 0; j < sol.triples.size(); ++j) {
        const auto& t = sol.triples[j];
        set_label(a, em, var_label("x", t[0], static_cast<int>(j)));
        set_label(a, em, var_label("y", t[1], static_cast<int>(j)));
        set_label(a, em, var_label("z", t[2], static_cast<int>(j)));
    }
}

}  // namespace

Assignment canonical_encode(const EncodedModel& em, const DomainSolution& sol) {
    auto report = check_feasible(em.problem, sol);
    if (!report.ok()) {
        std::string msg = "cannot encode an infeasible solution:";
        for (const auto& v : report.violations) msg += "\n  - " + v;
        throw EncodingError(msg);
    }
    Assignment a(em.model.num_vars(), 0);

    if (const auto* p = std::get_if<CliqueInstance>(&em.problem)) {
        encode_clique(em, *p, std::get<CliqueSet>(sol), a);
    } else if (std::get_if<ColoringInstance>(&em.problem) != nullptr) {
        encode_coloring(em, std::get<Coloring>(sol), a);
    } else if (const auto* p = std::get_if<DegreeMstInstance>(&em.problem)) {
        encode_mst(em, *p, std::get<RootedTree>(sol), a);
    } else if (const auto* p = std::get_if<SteinerInstance>(&em.problem)) {
        encode_steiner(em, *p, std::get<RootedTree>(sol), a);
    } else if (const auto* p = std::get_if<FvsInstance>(&em.problem)) {
        encode_fvs(em, *p, std::get<FeedbackVertexSet>(sol), a);
    } else if (const auto* p = std::get_if<FesInstance>(&em.problem)) {
        encode_fes(em, *p, std::get<FeedbackEdgeSet>(sol), a);
    } else if (const auto* p = std::get_if<BinPackingInstance>(&em.problem)) {
        encode_bins(em, *p, std::get<BinAssignment>(sol), a);
    } else if (std::get_if<NumberPartitionInstance>(&em.problem) != nullptr ||
               std::get_if<GraphPartitionInstance>(&em.problem) != nullptr) {
        encode_partition(em, std::get<Partition>(sol), a);
    } else if (std::get_if<SubsetSumInstance>(&em.problem) != nullptr) {
        encode_subset(em, std::get<SubsetSelection>(sol), a);
    } else {
        encode_n3dm(em, std::get<TripleMatching>(sol), a);
    }
    return a;
}

// ---- Decoding ----

namespace {

// Reads a one-hot group; on several set bits picks the first and records a
// violation, on none returns nullopt.
std::optional<int> read_choice(const Assignment& a, const EncodedModel& em,
                               const std::string& what,
                               const std::vector<std::pair<int, std::string>>& choices,
                               std::vector<std::string>& violations) {
    std::optional<int> first;
    int count = 0;
    for (const auto& [value, label] : choices) {
        if (!bit(a, em, label)) continue;
        ++count;
        if (!first) first = value;
    }
    if (count > 1)
        violations.push_back(what + " has " + std::to_string(count) +
                             " selector bits set; using the first");
    return first;
}

DomainSolution decode_solution(const EncodedModel& em, const Assignment& a,
                               std::vector<std::string>& violations) {
    if (const auto* p = std::get_if<CliqueInstance>(&em.problem)) {
        CliqueSet sol;
        for (int v = 0; v < p->graph.num_vertices(); ++v)
            if (bit(a, em, var_label("x", v))) sol.vertices.push_back(v);
        return sol;
    }
    if (const auto* p = std::get_if<ColoringInstance>(&em.problem)) {
        Coloring sol;
        sol.color_of.resize(p->graph.num_vertices());
        if (em.options.coloring_encoding == ColoringEncoding::single_bit) {
            for (int v = 0; v < p->graph.num_vertices(); ++v)
                sol.color_of[v] = bit(a, em, var_label("x", v)) ? 1 : 0;
            return sol;
        }
        for (int v = 0; v < p->graph.num_vertices(); ++v) {
            std::vector<std::pair<int, std::string>> choices;
            for (int c = 0; c < p->num_colors; ++c) choices.emplace_back(c, var_label("x", v, c));
            sol.color_of[v] =
                read_choice(a, em, "vertex " + std::to_string(v), choices, violations);
        }
        return sol;
    }
    if (std::get_if<DegreeMstInstance>(&em.problem) != nullptr ||
        std::get_if<SteinerInstance>(&em.problem) != nullptr) {
        const auto* mst = std::get_if<DegreeMstInstance>(&em.problem);
        const Graph& g = mst ? mst->graph.graph : std::get<SteinerInstance>(em.problem).graph.graph;
        int depth_bound = mst ? mst->depth_bound : std::get<SteinerInstance>(em.problem).depth_bound;
        RootedTree sol;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (bit(a, em, var_label("xv", v, 0))) {
                sol.root = v;
                break;
            }
        for (const auto& [u, v] : g.edges()) {
            bool included = false;
            for (int i = 1; i <= depth_bound && !included; ++i)
                included = bit(a, em, var_label("xe", u, v, i)) ||
                           bit(a, em, var_label("xe", v, u, i));
            if (included) sol.edges.emplace_back(u, v);
        }
        return sol;
    }
    if (const auto* p = std::get_if<FvsInstance>(&em.problem)) {
        FeedbackVertexSet sol;
        for (int v = 0; v < p->graph.num_vertices(); ++v)
            if (bit(a, em, var_label("y", v))) sol.vertices.push_back(v);
        return sol;
    }
    if (const auto* p = std::get_if<FesInstance>(&em.problem)) {
        FeedbackEdgeSet sol;
        for (const auto& [u, v] : p->digraph.arcs()) {
            bool kept;
            if (em.options.fes_no_arc_flags) {
                kept = false;
                for (int i = 1; i < p->digraph.num_vertices() && !kept; ++i)
                    kept = bit(a, em, var_label("xe", u, v, i));
            } else {
                kept = bit(a, em, var_label("ye", u, v));
            }
            if (!kept) sol.arcs.emplace_back(u, v);
        }
        return sol;
    }
    if (const auto* p = std::get_if<BinPackingInstance>(&em.problem)) {
        BinAssignment sol;
        sol.bin_of.resize(p->item_weights.size());
        for (std::size_t j = 0; j < p->item_weights.size(); ++j) {
            std::vector<std::pair<int, std::string>> choices;
            for (int i = 0; i < p->num_bins; ++i)
                choices.emplace_back(i, var_label("x", i, static_cast<int>(j)));
            sol.bin_of[j] =
                read_choice(a, em, "object " + std::to_string(j), choices, violations);
        }
        return sol;
    }
    if (std::get_if<NumberPartitionInstance>(&em.problem) != nullptr ||
        std::get_if<GraphPartitionInstance>(&em.problem) != nullptr) {
        const auto* np = std::get_if<NumberPartitionInstance>(&em.problem);
        int count = np ? static_cast<int>(np->values.size())
                       : std::get<GraphPartitionInstance>(em.problem).graph.num_vertices();
        int parts = np ? np->num_parts : std::get<GraphPartitionInstance>(em.problem).num_parts;
        Partition sol;
        sol.num_parts = parts;
        sol.part_of.resize(count);
        for (int i = 0; i < count; ++i) {
            std::vector<std::pair<int, std::string>> choices;
            for (int j = 0; j < parts; ++j) choices.emplace_back(j, var_label("x", i, j));
            sol.part_of[i] =
                read_choice(a, em, "element " + std::to_string(i), choices, violations);
        }
        return sol;
    }
    if (const auto* p = std::get_if<SubsetSumInstance>(&em.problem)) {
        SubsetSelection sol;
        for (int i = 0; i < static_cast<int>(p->values.size()); ++i)
            if (bit(a, em, var_label("x", i))) sol.indices.push_back(i);
        return sol;
    }
    const auto& p = std::get<N3dmInstance>(em.problem);
    int n = static_cast<int>(p.xs.size());
    TripleMatching sol;
    for (int j = 0; j < n; ++j) {
        std::array<int, 3> triple{};
        bool complete = true;
        const char* families[3] = {"x", "y", "z"};
        for (int f = 0; f < 3; ++f) {
            std::vector<std::pair<int, std::string>> choices;
            for (int i = 0; i < n; ++i) choices.emplace_back(i, var_label(families[f], i, j));
            auto pick = read_choice(a, em, std::string(families[f]) + " slot " + std::to_string(j),
                                    choices, violations);
            if (!pick) {
                complete = false;
                break;
            }
            triple[f] = *pick;
        }
        if (complete)
            sol.triples.push_back(triple);
        else
            violations.push_back("slot " + std::to_string(j) +
                                 " does not pick one element from every list; dropped");
    }
    std::sort(sol.triples.begin(), sol.triples.end());
    return sol;
}

}  // namespace

std::pair<DomainSolution, FeasibilityReport> decode(const EncodedModel& em, const Assignment& a) {
    if (a.size() != em.model.num_vars())
        throw DimensionError("assignment has " + std::to_string(a.size()) + " bits, model has " +
                             std::to_string(em.model.num_vars()) + " variables");
    std::vector<std::string> decode_violations;
    DomainSolution sol = decode_solution(em, a, decode_violations);
    FeasibilityReport report = check_feasible(em.problem, sol);
    report.violations.insert(report.violations.begin(), decode_violations.begin(),
                             decode_violations.end());
    return {std::move(sol), std::move(report)};
}

Coeff analytic_canonical_energy(const EncodedModel& em, const DomainSolution& sol) {
    auto report = check_feasible(em.problem, sol);
    if (!report.ok()) {
        std::string msg = "no closed-form energy for an infeasible solution:";
        for (const auto& v : report.violations) msg += "\n  - " + v;
        throw EncodingError(msg);
    }
    Coeff obj = objective(em.problem, sol);
    const PenaltyWeights& w = em.weights;

    if (std::get_if<CliqueInstance>(&em.problem) != nullptr) return checked_mul(w.c, obj);
    if (std::get_if<ColoringInstance>(&em.problem) != nullptr) return 0;
    if (std::get_if<DegreeMstInstance>(&em.problem) != nullptr ||
        std::get_if<SteinerInstance>(&em.problem) != nullptr)
        return checked_mul(w.b, obj);
    if (const auto* p = std::get_if<FvsInstance>(&em.problem)) {
        if (em.formulation == Formulation::corrected) return checked_mul(w.c, obj);
        // The published variants leave residual penalties on edges that touch
        // the feedback set even for honest configurations.
        const auto& fvs = std::get<FeedbackVertexSet>(sol);
        std::vector<bool> removed(p->graph.num_vertices(), false);
        for (int v : fvs.vertices) removed[v] = true;
        Coeff extra = 0;
        Coeff d = p->depth_bound;
        for (const auto& [u, v] : p->graph.edges()) {
            int ends = (removed[u] ? 1 : 0) + (removed[v] ? 1 : 0);
            if (ends == 0) continue;
            if (em.formulation == Formulation::lucas) {
                Coeff gap = 1 - checked_mul(d, ends);
                extra = checked_add(extra, checked_mul(gap, gap));
            } else if (ends == 2) {
                extra = checked_add(extra, 1);
            }
        }
        return checked_add(checked_mul(w.b, obj), checked_mul(w.a, extra));
    }
    if (std::get_if<FesInstance>(&em.problem) != nullptr)
        return checked_mul(em.formulation == Formulation::corrected ? w.c : w.b, obj);
    if (std::get_if<BinPackingInstance>(&em.problem) != nullptr) return checked_mul(w.b, obj);
    if (std::get_if<GraphPartitionInstance>(&em.problem) != nullptr)
        return checked_mul(checked_mul(2, w.c), obj);
    // Number partitioning, subset sum and the matching problem are pure
    // constraint satisfaction: a feasible solution has energy zero.
    return 0;
}

}  // namespace qubokit
