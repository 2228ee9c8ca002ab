// Problem instances and domain-level solutions, independent of any QUBO
// encoding. Feasibility and objectives are defined directly on these types so
// encodings can be checked against them.
#ifndef QUBOKIT_PROBLEMS_HPP
#define QUBOKIT_PROBLEMS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qubokit/arith.hpp"

namespace qubokit {

struct InstanceError : std::runtime_error {
    explicit InstanceError(const std::string& what) : std::runtime_error(what) {}
};

struct FeasibilityError : std::runtime_error {
    explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

// Simple undirected graph. Edges are stored normalized (u < v), sorted and
// unique; self-loops and duplicates are rejected at construction.
class Graph {
public:
    Graph() = default;
    Graph(int num_vertices, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return num_vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;
    std::vector<int> neighbors(int v) const;
    bool connected() const;

    bool operator==(const Graph&) const = default;

private:
    int num_vertices_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// Undirected graph with a positive integer cost per edge, aligned with
// Graph::edges() order.
struct WeightedGraph {
    Graph graph;
    std::vector<Coeff> costs;

    WeightedGraph() = default;
    WeightedGraph(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                  const std::vector<Coeff>& edge_costs);

    Coeff max_cost() const;
    bool operator==(const WeightedGraph&) const = default;
};

// Directed graph; arcs sorted and unique, self-loops rejected. Antiparallel
// arc pairs are allowed.
class Digraph {
public:
    Digraph() = default;
    Digraph(int num_vertices, std::vector<std::pair<int, int>> arcs);

    int num_vertices() const { return num_vertices_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    bool has_arc(int u, int v) const;
    // In-degree plus out-degree, maximized over vertices.
    int max_total_degree() const;
    bool acyclic() const;

    bool operator==(const Digraph&) const = default;

private:
    int num_vertices_ = 0;
    std::vector<std::pair<int, int>> arcs_;
};

inline int default_depth_bound(int num_vertices) { return num_vertices / 2; }

struct CliqueInstance {
    Graph graph;
    explicit CliqueInstance(Graph g);
    CliqueInstance() = default;
    bool operator==(const CliqueInstance&) const = default;
};

struct ColoringInstance {
    Graph graph;
    int num_colors = 0;
    ColoringInstance(Graph g, int colors);
    ColoringInstance() = default;
    bool operator==(const ColoringInstance&) const = default;
};

struct DegreeMstInstance {
    WeightedGraph graph;
    int max_degree = 0;   // degree cap on the tree, >= 2
    int depth_bound = 0;  // defaults to floor(N/2)
    DegreeMstInstance(WeightedGraph g, int degree_cap, int depth = -1);
    DegreeMstInstance() = default;
    bool operator==(const DegreeMstInstance&) const = default;
};

struct SteinerInstance {
    WeightedGraph graph;
    std::vector<int> terminals;  // sorted, unique, size >= 2
    int depth_bound = 0;
    SteinerInstance(WeightedGraph g, std::vector<int> terminal_set, int depth = -1);
    SteinerInstance() = default;
    bool operator==(const SteinerInstance&) const = default;
};

struct FvsInstance {
    Graph graph;
    int depth_bound = 0;
    explicit FvsInstance(Graph g, int depth = -1);
    FvsInstance() = default;
    bool operator==(const FvsInstance&) const = default;
};

struct FesInstance {
    Digraph digraph;
    explicit FesInstance(Digraph g);
    FesInstance() = default;
    bool operator==(const FesInstance&) const = default;
};

struct BinPackingInstance {
    std::vector<Coeff> item_weights;  // positive
    Coeff capacity = 0;               // >= max item weight
    int num_bins = 0;                 // >= 1
    BinPackingInstance(std::vector<Coeff> weights, Coeff cap, int bins);
    BinPackingInstance() = default;
    bool operator==(const BinPackingInstance&) const = default;
};

struct NumberPartitionInstance {
    std::vector<Coeff> values;  // positive
    int num_parts = 0;          // >= 2
    NumberPartitionInstance(std::vector<Coeff> vals, int parts);
    NumberPartitionInstance() = default;
    bool operator==(const NumberPartitionInstance&) const = default;
};

struct GraphPartitionInstance {
    Graph graph;
    int num_parts = 0;  // >= 2
    GraphPartitionInstance(Graph g, int parts);
    GraphPartitionInstance() = default;
    bool operator==(const GraphPartitionInstance&) const = default;
};

struct SubsetSumInstance {
    std::vector<Coeff> values;  // positive
    Coeff target = 0;
    SubsetSumInstance(std::vector<Coeff> vals, Coeff t);
    SubsetSumInstance() = default;
    bool operator==(const SubsetSumInstance&) const = default;
};

// Numerical 3-dimensional matching over three equal-size value lists.
struct N3dmInstance {
    std::vector<Coeff> xs, ys, zs;
    Coeff target = 0;
    N3dmInstance(std::vector<Coeff> x, std::vector<Coeff> y, std::vector<Coeff> z, Coeff b);
    N3dmInstance() = default;
    bool operator==(const N3dmInstance&) const = default;
};

using ProblemInstance =
    std::variant<CliqueInstance, ColoringInstance, DegreeMstInstance, SteinerInstance, FvsInstance,
                 FesInstance, BinPackingInstance, NumberPartitionInstance, GraphPartitionInstance,
                 SubsetSumInstance, N3dmInstance>;

// ---- Domain solutions ----

struct CliqueSet {
    std::vector<int> vertices;  // sorted, unique
    bool operator==(const CliqueSet&) const = default;
};

struct Coloring {
    std::vector<std::optional<int>> color_of;  // nullopt = uncoloured
    bool operator==(const Coloring&) const = default;
};

struct RootedTree {
    std::optional<int> root;                  // encoding picks a centre when absent
    std::vector<std::pair<int, int>> edges;   // normalized u < v
    bool operator==(const RootedTree&) const = default;
};

struct FeedbackVertexSet {
    std::vector<int> vertices;  // sorted, unique
    bool operator==(const FeedbackVertexSet&) const = default;
};

struct FeedbackEdgeSet {
    std::vector<std::pair<int, int>> arcs;  // sorted, unique
    bool operator==(const FeedbackEdgeSet&) const = default;
};

struct BinAssignment {
    std::vector<std::optional<int>> bin_of;  // per object
    bool operator==(const BinAssignment&) const = default;
};

struct Partition {
    int num_parts = 0;
    std::vector<std::optional<int>> part_of;  // per element / vertex
    bool operator==(const Partition&) const = default;
};

struct SubsetSelection {
    std::vector<int> indices;  // sorted, unique
    bool operator==(const SubsetSelection&) const = default;
};

struct TripleMatching {
    // triples[j] = {x index, y index, z index}; normalized by ascending x index.
    std::vector<std::array<int, 3>> triples;
    bool operator==(const TripleMatching&) const = default;
};

using DomainSolution = std::variant<CliqueSet, Coloring, RootedTree, FeedbackVertexSet,
                                    FeedbackEdgeSet, BinAssignment, Partition, SubsetSelection,
                                    TripleMatching>;

struct FeasibilityReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks a solution against an instance; never throws on infeasible input,
// only on a solution type that does not match the instance.
FeasibilityReport check_feasible(const ProblemInstance& instance, const DomainSolution& sol);

// Domain objective under the minimization convention (cliques score -size).
// Throws FeasibilityError when the solution is infeasible.
Coeff objective(const ProblemInstance& instance, const DomainSolution& sol);

std::string problem_name(const ProblemInstance& instance);
std::string solution_to_string(const DomainSolution& sol);

}  // namespace qubokit

#endif
