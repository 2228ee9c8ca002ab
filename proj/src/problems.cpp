#include "qubokit/problems.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qubokit {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Disjoint-set forest used for connectivity and forest checks.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    // Returns false if u and v were already connected.
    bool unite(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent_[ru] = rv;
        return true;
    }

private:
    std::vector<int> parent_;
};

void check_vertex_range(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw InstanceError(std::string(what) + " " + std::to_string(v) + " out of range [0," +
                            std::to_string(n) + ")");
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 0) throw InstanceError("negative vertex count");
    for (auto& [u, v] : edges_) {
        check_vertex_range(u, num_vertices_, "edge endpoint");
        check_vertex_range(v, num_vertices_, "edge endpoint");
        if (u == v) throw InstanceError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InstanceError("duplicate edge in graph");
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
    return d;
}

int Graph::max_degree() const {
    std::vector<int> deg(num_vertices_, 0);
    for (const auto& [a, b] : edges_) { ++deg[a]; ++deg[b]; }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

bool Graph::connected() const {
    if (num_vertices_ <= 1) return true;
    UnionFind uf(num_vertices_);
    int components = num_vertices_;
    for (const auto& [u, v] : edges_)
        if (uf.unite(u, v)) --components;
    return components == 1;
}

WeightedGraph::WeightedGraph(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                             const std::vector<Coeff>& edge_costs) {
    if (edges.size() != edge_costs.size())
        throw InstanceError("edge and cost lists differ in length");
    // Normalize and sort edges together with their costs.
    std::vector<std::pair<std::pair<int, int>, Coeff>> pairs;
    pairs.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [u, v] = edges[k];
        if (u > v) std::swap(u, v);
        if (edge_costs[k] < 1)
            throw InstanceError("edge cost must be a positive integer, got " +
                                std::to_string(edge_costs[k]) + " on edge " + edge_str(u, v));
        pairs.emplace_back(std::make_pair(u, v), edge_costs[k]);
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::pair<int, int>> sorted_edges;
    for (const auto& [e, c] : pairs) {
        sorted_edges.push_back(e);
        costs.push_back(c);
    }
    graph = Graph(num_vertices, std::move(sorted_edges));
}

Coeff WeightedGraph::max_cost() const {
    return costs.empty() ? 0 : *std::max_element(costs.begin(), costs.end());
}

Digraph::Digraph(int num_vertices, std::vector<std::pair<int, int>> arcs)
    : num_vertices_(num_vertices), arcs_(std::move(arcs)) {
    if (num_vertices_ < 0) throw InstanceError("negative vertex count");
    for (const auto& [u, v] : arcs_) {
        check_vertex_range(u, num_vertices_, "arc endpoint");
        check_vertex_range(v, num_vertices_, "arc endpoint");
        if (u == v) throw InstanceError("self-loop at vertex " + std::to_string(u));
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        throw InstanceError("duplicate arc in digraph");
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

int Digraph::max_total_degree() const {
    std::vector<int> deg(num_vertices_, 0);
    for (const auto& [u, v] : arcs_) { ++deg[u]; ++deg[v]; }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Digraph::acyclic() const {
    // Kahn's algorithm.
    std::vector<int> indeg(num_vertices_, 0);
    for (const auto& [u, v] : arcs_) ++indeg[v];
    std::vector<int> queue;
    for (int v = 0; v < num_vertices_; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++removed;
        for (const auto& [a, b] : arcs_)
            if (a == v && --indeg[b] == 0) queue.push_back(b);
    }
    return removed == num_vertices_;
}

CliqueInstance::CliqueInstance(Graph g) : graph(std::move(g)) {
    if (graph.max_degree() < 1)
        throw InstanceError("clique instance requires max degree >= 1");
}

ColoringInstance::ColoringInstance(Graph g, int colors) : graph(std::move(g)), num_colors(colors) {
    if (num_colors < 1) throw InstanceError("colouring requires at least one colour");
    if (graph.num_vertices() < 1) throw InstanceError("colouring requires at least one vertex");
}

DegreeMstInstance::DegreeMstInstance(WeightedGraph g, int degree_cap, int depth)
    : graph(std::move(g)), max_degree(degree_cap), depth_bound(depth) {
    int n = graph.graph.num_vertices();
    if (n < 2) throw InstanceError("spanning tree instance requires at least two vertices");
    if (!graph.graph.connected()) throw InstanceError("spanning tree instance requires a connected graph");
    if (max_degree < 2) throw InstanceError("degree cap must be at least 2");
    if (depth_bound < 0) depth_bound = default_depth_bound(n);
    if (depth_bound < 1) throw InstanceError("depth bound must be at least 1");
}

SteinerInstance::SteinerInstance(WeightedGraph g, std::vector<int> terminal_set, int depth)
    : graph(std::move(g)), terminals(std::move(terminal_set)), depth_bound(depth) {
    int n = graph.graph.num_vertices();
    if (n < 2) throw InstanceError("Steiner instance requires at least two vertices");
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    if (terminals.size() < 2) throw InstanceError("Steiner instance requires at least two terminals");
    for (int t : terminals) check_vertex_range(t, n, "terminal");
    if (depth_bound < 0) depth_bound = default_depth_bound(n);
    if (depth_bound < 1) throw InstanceError("depth bound must be at least 1");
}

FvsInstance::FvsInstance(Graph g, int depth) : graph(std::move(g)), depth_bound(depth) {
    if (graph.num_vertices() < 1) throw InstanceError("feedback vertex set requires a vertex");
    if (depth_bound < 0) depth_bound = default_depth_bound(graph.num_vertices());
}

FesInstance::FesInstance(Digraph g) : digraph(std::move(g)) {
    if (digraph.num_vertices() < 1) throw InstanceError("feedback edge set requires a vertex");
}

BinPackingInstance::BinPackingInstance(std::vector<Coeff> weights, Coeff cap, int bins)
    : item_weights(std::move(weights)), capacity(cap), num_bins(bins) {
    if (item_weights.empty()) throw InstanceError("bin packing requires at least one object");
    if (num_bins < 1) throw InstanceError("bin packing requires at least one bin");
    for (Coeff w : item_weights)
        if (w < 1) throw InstanceError("object weights must be positive integers");
    Coeff maxw = *std::max_element(item_weights.begin(), item_weights.end());
    if (capacity < maxw)
        throw InstanceError("capacity " + std::to_string(capacity) +
                            " below heaviest object " + std::to_string(maxw));
}

NumberPartitionInstance::NumberPartitionInstance(std::vector<Coeff> vals, int parts)
    : values(std::move(vals)), num_parts(parts) {
    if (values.empty()) throw InstanceError("number partitioning requires values");
    if (num_parts < 2) throw InstanceError("number partitioning requires at least two parts");
    for (Coeff v : values)
        if (v < 1) throw InstanceError("values must be positive integers");
}

GraphPartitionInstance::GraphPartitionInstance(Graph g, int parts)
    : graph(std::move(g)), num_parts(parts) {
    if (num_parts < 2) throw InstanceError("graph partitioning requires at least two parts");
    if (graph.num_vertices() < 1) throw InstanceError("graph partitioning requires a vertex");
}

SubsetSumInstance::SubsetSumInstance(std::vector<Coeff> vals, Coeff t)
    : values(std::move(vals)), target(t) {
    if (values.empty()) throw InstanceError("subset sum requires values");
    for (Coeff v : values)
        if (v < 1) throw InstanceError("values must be positive integers");
    if (target < 0) throw InstanceError("target must be non-negative");
}

N3dmInstance::N3dmInstance(std::vector<Coeff> x, std::vector<Coeff> y, std::vector<Coeff> z, Coeff b)
    : xs(std::move(x)), ys(std::move(y)), zs(std::move(z)), target(b) {
    if (xs.empty() || xs.size() != ys.size() || ys.size() != zs.size())
        throw InstanceError("matching requires three value lists of equal positive size");
    for (const auto* list : {&xs, &ys, &zs})
        for (Coeff v : *list)
            if (v < 1) throw InstanceError("values must be positive integers");
}

// ---- Feasibility ----

namespace {

FeasibilityReport check_clique(const CliqueInstance& inst, const CliqueSet& sol) {
    FeasibilityReport rep;
    const Graph& g = inst.graph;
    std::set<int> seen;
    for (int v : sol.vertices) {
        if (v < 0 || v >= g.num_vertices())
            rep.violations.push_back("vertex " + std::to_string(v) + " out of range");
        else if (!seen.insert(v).second)
            rep.violations.push_back("vertex " + std::to_string(v) + " listed twice");
    }
    std::vector<int> vs(seen.begin(), seen.end());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j]))
                rep.violations.push_back("missing edge " + edge_str(vs[i], vs[j]));
    return rep;
}

FeasibilityReport check_coloring(const Graph& g, int num_colors, const Coloring& sol) {
    FeasibilityReport rep;
    if (static_cast<int>(sol.color_of.size()) != g.num_vertices()) {
        rep.violations.push_back("colouring covers " + std::to_string(sol.color_of.size()) +
                                 " vertices, graph has " + std::to_string(g.num_vertices()));
        return rep;
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!sol.color_of[v])
            rep.violations.push_back("uncoloured vertex " + std::to_string(v));
        else if (*sol.color_of[v] < 0 || *sol.color_of[v] >= num_colors)
            rep.violations.push_back("vertex " + std::to_string(v) + " has colour out of range");
    }
    for (const auto& [u, v] : g.edges())
        if (sol.color_of[u] && sol.color_of[v] && *sol.color_of[u] == *sol.color_of[v])
            rep.violations.push_back("edge " + edge_str(u, v) + " has equal endpoint colours");
    return rep;
}

// Shared tree validation: edges must come from the host graph and form a tree
// on exactly the covered vertex set.
void check_tree_edges(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                      FeasibilityReport& rep, std::set<int>& covered) {
    std::set<std::pair<int, int>> seen;
    UnionFind uf(g.num_vertices());
    bool cycle = false;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= g.num_vertices() || u == v) {
            rep.violations.push_back("invalid edge " + edge_str(u, v));
            continue;
        }
        if (!g.has_edge(u, v)) {
            rep.violations.push_back("edge " + edge_str(u, v) + " not in graph");
            continue;
        }
        if (!seen.insert({u, v}).second) {
            rep.violations.push_back("edge " + edge_str(u, v) + " listed twice");
            continue;
        }
        covered.insert(u);
        covered.insert(v);
        if (!uf.unite(u, v)) cycle = true;
    }
    if (cycle) rep.violations.push_back("edges contain a cycle");
    if (!covered.empty()) {
        int root = *covered.begin();
        for (int v : covered)
            if (uf.find(v) != uf.find(root)) {
                rep.violations.push_back("edges do not form a connected tree");
                break;
            }
    }
}

FeasibilityReport check_mst(const DegreeMstInstance& inst, const RootedTree& sol) {
    FeasibilityReport rep;
    const Graph& g = inst.graph.graph;
    std::set<int> covered;
    check_tree_edges(g, sol.edges, rep, covered);
    if (static_cast<int>(covered.size()) != g.num_vertices())
        rep.violations.push_back("tree does not span all vertices");
    std::map<int, int> deg;
    for (auto [u, v] : sol.edges) { ++deg[u]; ++deg[v]; }
    for (const auto& [v, d] : deg)
        if (d > inst.max_degree)
            rep.violations.push_back("vertex " + std::to_string(v) + " has tree degree " +
                                     std::to_string(d) + " above cap " +
                                     std::to_string(inst.max_degree));
    return rep;
}

FeasibilityReport check_steiner(const SteinerInstance& inst, const RootedTree& sol) {
    FeasibilityReport rep;
    const Graph& g = inst.graph.graph;
    std::set<int> covered;
    check_tree_edges(g, sol.edges, rep, covered);
    for (int t : inst.terminals)
        if (!covered.count(t))
            rep.violations.push_back("terminal " + std::to_string(t) + " not covered by tree");
    return rep;
}

FeasibilityReport check_fvs(const FvsInstance& inst, const FeedbackVertexSet& sol) {
    FeasibilityReport rep;
    const Graph& g = inst.graph;
    std::set<int> removed;
    for (int v : sol.vertices) {
        if (v < 0 || v >= g.num_vertices())
            rep.violations.push_back("vertex " + std::to_string(v) + " out of range");
        else if (!removed.insert(v).second)
            rep.violations.push_back("vertex " + std::to_string(v) + " listed twice");
    }
    // The remaining graph must be a forest.
    UnionFind uf(g.num_vertices());
    for (const auto& [u, v] : g.edges()) {
        if (removed.count(u) || removed.count(v)) continue;
        if (!uf.unite(u, v)) {
            rep.violations.push_back("graph minus the set still contains a cycle");
            break;
        }
    }
    return rep;
}

FeasibilityReport check_fes(const FesInstance& inst, const FeedbackEdgeSet& sol) {
    FeasibilityReport rep;
    const Digraph& g = inst.digraph;
    std::set<std::pair<int, int>> removed;
    for (const auto& [u, v] : sol.arcs) {
        if (!g.has_arc(u, v))
            rep.violations.push_back("arc " + edge_str(u, v) + " not in digraph");
        else if (!removed.insert({u, v}).second)
            rep.violations.push_back("arc " + edge_str(u, v) + " listed twice");
    }
    std::vector<std::pair<int, int>> remaining;
    for (const auto& a : g.arcs())
        if (!removed.count(a)) remaining.push_back(a);
    if (!Digraph(g.num_vertices(), remaining).acyclic())
        rep.violations.push_back("digraph minus the set still contains a cycle");
    return rep;
}

FeasibilityReport check_bins(const BinPackingInstance& inst, const BinAssignment& sol) {
    FeasibilityReport rep;
    if (sol.bin_of.size() != inst.item_weights.size()) {
        rep.violations.push_back("assignment covers " + std::to_string(sol.bin_of.size()) +
                                 " objects, instance has " + std::to_string(inst.item_weights.size()));
        return rep;
    }
    std::map<int, Coeff> load;
    for (std::size_t j = 0; j < sol.bin_of.size(); ++j) {
        if (!sol.bin_of[j]) {
            rep.violations.push_back("object " + std::to_string(j) + " not placed in any bin");
            continue;
        }
        int bin = *sol.bin_of[j];
        if (bin < 0 || bin >= inst.num_bins) {
            rep.violations.push_back("object " + std::to_string(j) + " placed in bin out of range");
            continue;
        }
        load[bin] = checked_add(load.count(bin) ? load[bin] : 0, inst.item_weights[j]);
    }
    for (const auto& [bin, w] : load)
        if (w > inst.capacity)
            rep.violations.push_back("bin " + std::to_string(bin) + " load " + std::to_string(w) +
                                     " exceeds capacity " + std::to_string(inst.capacity));
    return rep;
}

FeasibilityReport check_partition_shape(std::size_t num_elements, int num_parts,
                                        const Partition& sol) {
    FeasibilityReport rep;
    if (sol.num_parts != num_parts)
        rep.violations.push_back("partition declares " + std::to_string(sol.num_parts) +
                                 " parts, instance has " + std::to_string(num_parts));
    if (sol.part_of.size() != num_elements) {
        rep.violations.push_back("partition covers " + std::to_string(sol.part_of.size()) +
                                 " elements, instance has " + std::to_string(num_elements));
        return rep;
    }
    for (std::size_t i = 0; i < sol.part_of.size(); ++i) {
        if (!sol.part_of[i])
            rep.violations.push_back("element " + std::to_string(i) + " not assigned to a part");
        else if (*sol.part_of[i] < 0 || *sol.part_of[i] >= num_parts)
            rep.violations.push_back("element " + std::to_string(i) + " assigned out of range");
    }
    return rep;
}

FeasibilityReport check_number_partition(const NumberPartitionInstance& inst, const Partition& sol) {
    FeasibilityReport rep = check_partition_shape(inst.values.size(), inst.num_parts, sol);
    if (!rep.ok()) return rep;
    std::vector<Coeff> sums(inst.num_parts, 0);
    for (std::size_t i = 0; i < inst.values.size(); ++i)
        sums[*sol.part_of[i]] = checked_add(sums[*sol.part_of[i]], inst.values[i]);
    for (int j = 1; j < inst.num_parts; ++j)
        if (sums[j] != sums[0])
            rep.violations.push_back("part sums differ: part 0 has " + std::to_string(sums[0]) +
                                     ", part " + std::to_string(j) + " has " + std::to_string(sums[j]));
    return rep;
}

FeasibilityReport check_graph_partition(const GraphPartitionInstance& inst, const Partition& sol) {
    FeasibilityReport rep = check_partition_shape(inst.graph.num_vertices(), inst.num_parts, sol);
    if (!rep.ok()) return rep;
    std::vector<int> sizes(inst.num_parts, 0);
    for (const auto& p : sol.part_of) ++sizes[*p];
    for (int j = 1; j < inst.num_parts; ++j)
        if (sizes[j] != sizes[0]) {
            rep.violations.push_back("part sizes differ");
            break;
        }
    return rep;
}

FeasibilityReport check_subset(const SubsetSumInstance& inst, const SubsetSelection& sol) {
    FeasibilityReport rep;
    std::set<int> seen;
    Coeff sum = 0;
    for (int i : sol.indices) {
        if (i < 0 || i >= static_cast<int>(inst.values.size())) {
            rep.violations.push_back("index " + std::to_string(i) + " out of range");
            continue;
        }
        if (!seen.insert(i).second) {
            rep.violations.push_back("index " + std::to_string(i) + " listed twice");
            continue;
        }
        sum = checked_add(sum, inst.values[i]);
    }
    if (sum != inst.target)
        rep.violations.push_back("selection sums to " + std::to_string(sum) + ", target is " +
                                 std::to_string(inst.target));
    return rep;
}

FeasibilityReport check_n3dm(const N3dmInstance& inst, const TripleMatching& sol) {
    FeasibilityReport rep;
    int n = static_cast<int>(inst.xs.size());
    if (static_cast<int>(sol.triples.size()) != n) {
        rep.violations.push_back("matching has " + std::to_string(sol.triples.size()) +
                                 " triples, instance needs " + std::to_string(n));
        return rep;
    }
    std::array<std::set<int>, 3> used;
    const std::array<const std::vector<Coeff>*, 3> lists = {&inst.xs, &inst.ys, &inst.zs};
    for (const auto& t : sol.triples) {
        Coeff sum = 0;
        bool valid = true;
        for (int c = 0; c < 3; ++c) {
            if (t[c] < 0 || t[c] >= n) {
                rep.violations.push_back("triple index " + std::to_string(t[c]) + " out of range");
                valid = false;
                continue;
            }
            if (!used[c].insert(t[c]).second) {
                rep.violations.push_back("coordinate " + std::to_string(c) + " index " +
                                         std::to_string(t[c]) + " used twice");
                valid = false;
            }
            sum = checked_add(sum, (*lists[c])[t[c]]);
        }
        if (valid && sum != inst.target)
            rep.violations.push_back("triple sums to " + std::to_string(sum) + ", target is " +
                                     std::to_string(inst.target));
    }
    return rep;
}

template <class Inst, class Sol>
const Sol& expect_solution(const Inst&, const DomainSolution& sol, const char* what) {
    const Sol* s = std::get_if<Sol>(&sol);
    if (!s) throw FeasibilityError(std::string("solution type does not match ") + what);
    return *s;
}

}  // namespace

FeasibilityReport check_feasible(const ProblemInstance& instance, const DomainSolution& sol) {
    return std::visit(
        [&](const auto& inst) -> FeasibilityReport {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, CliqueInstance>)
                return check_clique(inst, expect_solution<T, CliqueSet>(inst, sol, "clique"));
            else if constexpr (std::is_same_v<T, ColoringInstance>)
                return check_coloring(inst.graph, inst.num_colors,
                                      expect_solution<T, Coloring>(inst, sol, "colouring"));
            else if constexpr (std::is_same_v<T, DegreeMstInstance>)
                return check_mst(inst, expect_solution<T, RootedTree>(inst, sol, "spanning tree"));
            else if constexpr (std::is_same_v<T, SteinerInstance>)
                return check_steiner(inst, expect_solution<T, RootedTree>(inst, sol, "Steiner tree"));
            else if constexpr (std::is_same_v<T, FvsInstance>)
                return check_fvs(inst,
                                 expect_solution<T, FeedbackVertexSet>(inst, sol, "feedback vertex set"));
            else if constexpr (std::is_same_v<T, FesInstance>)
                return check_fes(inst,
                                 expect_solution<T, FeedbackEdgeSet>(inst, sol, "feedback edge set"));
            else if constexpr (std::is_same_v<T, BinPackingInstance>)
                return check_bins(inst, expect_solution<T, BinAssignment>(inst, sol, "bin packing"));
            else if constexpr (std::is_same_v<T, NumberPartitionInstance>)
                return check_number_partition(
                    inst, expect_solution<T, Partition>(inst, sol, "number partitioning"));
            else if constexpr (std::is_same_v<T, GraphPartitionInstance>)
                return check_graph_partition(
                    inst, expect_solution<T, Partition>(inst, sol, "graph partitioning"));
            else if constexpr (std::is_same_v<T, SubsetSumInstance>)
                return check_subset(inst, expect_solution<T, SubsetSelection>(inst, sol, "subset sum"));
            else
                return check_n3dm(inst, expect_solution<T, TripleMatching>(inst, sol, "matching"));
        },
        instance);
}

Coeff objective(const ProblemInstance& instance, const DomainSolution& sol) {
    FeasibilityReport rep = check_feasible(instance, sol);
    if (!rep.ok())
        throw FeasibilityError("objective of infeasible solution: " + rep.violations.front());

    return std::visit(
        [&](const auto& inst) -> Coeff {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, CliqueInstance>) {
                return -static_cast<Coeff>(std::get<CliqueSet>(sol).vertices.size());
            } else if constexpr (std::is_same_v<T, DegreeMstInstance> ||
                                 std::is_same_v<T, SteinerInstance>) {
                const auto& tree = std::get<RootedTree>(sol);
                Coeff total = 0;
                const auto& edges = inst.graph.graph.edges();
                for (auto [u, v] : tree.edges) {
                    if (u > v) std::swap(u, v);
                    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
                    total = checked_add(total, inst.graph.costs[it - edges.begin()]);
                }
                return total;
            } else if constexpr (std::is_same_v<T, FvsInstance>) {
                return static_cast<Coeff>(std::get<FeedbackVertexSet>(sol).vertices.size());
            } else if constexpr (std::is_same_v<T, FesInstance>) {
                return static_cast<Coeff>(std::get<FeedbackEdgeSet>(sol).arcs.size());
            } else if constexpr (std::is_same_v<T, BinPackingInstance>) {
                const auto& bins = std::get<BinAssignment>(sol);
                std::set<int> used;
                for (const auto& b : bins.bin_of) used.insert(*b);
                return static_cast<Coeff>(used.size());
            } else if constexpr (std::is_same_v<T, GraphPartitionInstance>) {
                const auto& part = std::get<Partition>(sol);
                Coeff cut = 0;
                for (const auto& [u, v] : inst.graph.edges())
                    if (*part.part_of[u] != *part.part_of[v]) ++cut;
                return cut;
            } else {
                // Exact-satisfaction problems: any feasible solution scores 0.
                return 0;
            }
        },
        instance);
}

std::string problem_name(const ProblemInstance& instance) {
    return std::visit(
        [](const auto& inst) -> std::string {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, CliqueInstance>) return "clique";
            else if constexpr (std::is_same_v<T, ColoringInstance>) return "coloring";
            else if constexpr (std::is_same_v<T, DegreeMstInstance>) return "degree_mst";
            else if constexpr (std::is_same_v<T, SteinerInstance>) return "steiner";
            else if constexpr (std::is_same_v<T, FvsInstance>) return "fvs";
            else if constexpr (std::is_same_v<T, FesInstance>) return "fes";
            else if constexpr (std::is_same_v<T, BinPackingInstance>) return "bin_packing";
            else if constexpr (std::is_same_v<T, NumberPartitionInstance>) return "number_partition";
            else if constexpr (std::is_same_v<T, GraphPartitionInstance>) return "graph_partition";
            else if constexpr (std::is_same_v<T, SubsetSumInstance>) return "subset_sum";
            else return "n3dm";
        },
        instance);
}

std::string solution_to_string(const DomainSolution& sol) {
    std::ostringstream out;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CliqueSet>) {
                out << "clique {";
                for (std::size_t i = 0; i < s.vertices.size(); ++i)
                    out << (i ? ", " : "") << s.vertices[i];
                out << "}";
            } else if constexpr (std::is_same_v<T, Coloring>) {
                out << "colouring [";
                for (std::size_t v = 0; v < s.color_of.size(); ++v) {
                    out << (v ? ", " : "");
                    if (s.color_of[v]) out << *s.color_of[v];
                    else out << "-";
                }
                out << "]";
            } else if constexpr (std::is_same_v<T, RootedTree>) {
                out << "tree";
                if (s.root) out << " root " << *s.root;
                out << " edges {";
                for (std::size_t i = 0; i < s.edges.size(); ++i)
                    out << (i ? ", " : "") << "(" << s.edges[i].first << "," << s.edges[i].second << ")";
                out << "}";
            } else if constexpr (std::is_same_v<T, FeedbackVertexSet>) {
                out << "feedback vertices {";
                for (std::size_t i = 0; i < s.vertices.size(); ++i)
                    out << (i ? ", " : "") << s.vertices[i];
                out << "}";
            } else if constexpr (std::is_same_v<T, FeedbackEdgeSet>) {
                out << "feedback arcs {";
                for (std::size_t i = 0; i < s.arcs.size(); ++i)
                    out << (i ? ", " : "") << "(" << s.arcs[i].first << "," << s.arcs[i].second << ")";
                out << "}";
            } else if constexpr (std::is_same_v<T, BinAssignment>) {
                out << "bins [";
                for (std::size_t j = 0; j < s.bin_of.size(); ++j) {
                    out << (j ? ", " : "");
                    if (s.bin_of[j]) out << *s.bin_of[j];
                    else out << "-";
                }
                out << "]";
            } else if constexpr (std::is_same_v<T, Partition>) {
                out << "parts [";
                for (std::size_t i = 0; i < s.part_of.size(); ++i) {
                    out << (i ? ", " : "");
                    if (s.part_of[i]) out << *s.part_of[i];
                    else out << "-";
                }
                out << "]";
            } else if constexpr (std::is_same_v<T, SubsetSelection>) {
                out << "subset {";
                for (std::size_t i = 0; i < s.indices.size(); ++i)
                    out << (i ? ", " : "") << s.indices[i];
                out << "}";
            } else {
                out << "matching {";
                for (std::size_t i = 0; i < s.triples.size(); ++i)
                    out << (i ? ", " : "") << "(" << s.triples[i][0] << "," << s.triples[i][1] << ","
                        << s.triples[i][2] << ")";
                out << "}";
            }
        },
        sol);
    return out.str();
}

}  // namespace qubokit
