// Shared test utilities: an independent energy evaluation (kept deliberately
// naive so it cannot share a bug with the library) and random generators for
// instances with known-feasible solutions.
#ifndef QUBOKIT_TESTS_HELPERS_HPP
#define QUBOKIT_TESTS_HELPERS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "qubokit/oracle.hpp"
#include "qubokit/problems.hpp"
#include "qubokit/qubo.hpp"

namespace qubokit::testing {

// Direct quadratic-form evaluation, no incremental tricks.
inline Coeff naive_energy(const QuboModel& model, const Assignment& a) {
    Coeff total = model.offset();
    for (Index i = 0; i < model.num_vars(); ++i)
        if (a[i]) total += model.linear(i);
    for (const auto& [key, coeff] : model.quadratic_terms())
        if (a[key.first] && a[key.second]) total += coeff;
    return total;
}

inline Assignment nth_assignment(Index num_vars, std::uint64_t n) {
    Assignment a(num_vars, 0);
    for (Index i = 0; i < num_vars; ++i) a[i] = static_cast<std::uint8_t>((n >> i) & 1);
    return a;
}

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool rand_bool(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Random graph with at least one edge.
inline Graph random_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_bool(rng, p)) edges.emplace_back(u, v);
    if (edges.empty()) {
        int u = rand_int(rng, 0, n - 2);
        edges.emplace_back(u, rand_int(rng, u + 1, n - 1));
    }
    return Graph(n, edges);
}

// Random tree plus extra edges: always connected.
inline Graph random_connected_graph(Rng& rng, int n, double extra_p) {
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = rand_int(rng, 0, v - 1);
        edges.insert({u, v});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_bool(rng, extra_p)) edges.insert({u, v});
    return Graph(n, {edges.begin(), edges.end()});
}

inline std::vector<Coeff> random_costs(Rng& rng, std::size_t count, Coeff lo, Coeff hi) {
    std::vector<Coeff> out(count);
    for (auto& c : out) c = std::uniform_int_distribution<Coeff>(lo, hi)(rng);
    return out;
}

// Maximal clique grown from a random edge.
inline CliqueSet random_clique(const Graph& g, Rng& rng) {
    auto edges = g.edges();
    auto [u, v] = edges[rand_int(rng, 0, static_cast<int>(edges.size()) - 1)];
    std::vector<int> clique{u, v};
    for (;;) {
        std::vector<int> candidates;
        for (int w = 0; w < g.num_vertices(); ++w) {
            if (std::find(clique.begin(), clique.end(), w) != clique.end()) continue;
            bool all = true;
            for (int c : clique) all = all && g.has_edge(w, c);
            if (all) candidates.push_back(w);
        }
        if (candidates.empty()) break;
        clique.push_back(candidates[rand_int(rng, 0, static_cast<int>(candidates.size()) - 1)]);
    }
    std::sort(clique.begin(), clique.end());
    return CliqueSet{clique};
}

// Builds the colouring first, then only allows edges between colour classes,
// so the instance is properly colourable by construction.
inline std::pair<ColoringInstance, Coloring> random_colorable(Rng& rng, int n, int colors) {
    Coloring sol;
    sol.color_of.resize(n);
    for (int v = 0; v < n; ++v) sol.color_of[v] = rand_int(rng, 0, colors - 1);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (*sol.color_of[u] != *sol.color_of[v] && rand_bool(rng, 0.5))
                edges.emplace_back(u, v);
    return {ColoringInstance(Graph(n, edges), colors), sol};
}

// Random spanning tree via union-find over shuffled edges.
inline std::vector<std::pair<int, int>> random_spanning_tree(const Graph& g, Rng& rng) {
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<std::pair<int, int>> tree;
    for (const auto& [u, v] : edges) {
        int ru = root(u), rv = root(v);
        if (ru == rv) continue;
        parent[ru] = rv;
        tree.emplace_back(u, v);
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

// Removes vertices until the remaining graph is a forest.
inline FeedbackVertexSet random_fvs(const Graph& g, Rng& rng) {
    int n = g.num_vertices();
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) removed[v] = rand_bool(rng, 0.2);
    for (;;) {
        // Union-find cycle detection over the kept edges.
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        std::optional<int> on_cycle;
        for (const auto& [u, v] : g.edges()) {
            if (removed[u] || removed[v]) continue;
            int ru = root(u), rv = root(v);
            if (ru == rv) {
                on_cycle = rand_bool(rng, 0.5) ? u : v;
                break;
            }
            parent[ru] = rv;
        }
        if (!on_cycle) break;
        removed[*on_cycle] = true;
    }
    FeedbackVertexSet out;
    for (int v = 0; v < n; ++v)
        if (removed[v]) out.vertices.push_back(v);
    return out;
}

inline Digraph random_digraph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rand_bool(rng, p)) arcs.emplace_back(u, v);
    if (arcs.empty()) arcs.emplace_back(0, 1);
    return Digraph(n, arcs);
}

// Backward arcs of a random vertex order form a feedback set.
inline FeedbackEdgeSet random_fes(const Digraph& g, Rng& rng) {
    std::vector<int> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> position(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) position[order[i]] = i;
    FeedbackEdgeSet out;
    for (const auto& [u, v] : g.arcs())
        if (position[u] > position[v]) out.arcs.emplace_back(u, v);
    return out;
}

// First-fit packing; the instance gets exactly the bins the packing needs.
inline std::pair<BinPackingInstance, BinAssignment> random_bin_packing(Rng& rng) {
    int objects = rand_int(rng, 1, 4);
    std::vector<Coeff> weights = random_costs(rng, objects, 1, 5);
    Coeff capacity = *std::max_element(weights.begin(), weights.end()) + rand_int(rng, 0, 3);
    std::vector<Coeff> load;
    BinAssignment sol;
    sol.bin_of.resize(objects);
    for (int j = 0; j < objects; ++j) {
        int placed = -1;
        for (std::size_t i = 0; i < load.size() && placed < 0; ++i)
            if (load[i] + weights[j] <= capacity) placed = static_cast<int>(i);
        if (placed < 0) {
            placed = static_cast<int>(load.size());
            load.push_back(0);
        }
        load[placed] += weights[j];
        sol.bin_of[j] = placed;
    }
    return {BinPackingInstance(weights, capacity, static_cast<int>(load.size())), sol};
}

// m copies of every base value, dealt one per part: sums are equal.
inline std::pair<NumberPartitionInstance, Partition> random_number_partition(Rng& rng) {
    int parts = rand_int(rng, 2, 3);
    int base = rand_int(rng, 1, 3);
    std::vector<Coeff> values;
    Partition sol;
    sol.num_parts = parts;
    for (int j = 0; j < base; ++j) {
        Coeff value = rand_int(rng, 1, 6);
        for (int i = 0; i < parts; ++i) {
            values.push_back(value);
            sol.part_of.emplace_back(i);
        }
    }
    return {NumberPartitionInstance(values, parts), sol};
}

inline std::pair<GraphPartitionInstance, Partition> random_graph_partition(Rng& rng) {
    int parts = rand_int(rng, 2, 3);
    int per_part = rand_int(rng, 1, 2);
    int n = parts * per_part;
    Graph g = random_graph(rng, n, 0.5);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Partition sol;
    sol.num_parts = parts;
    sol.part_of.resize(n);
    for (int i = 0; i < n; ++i) sol.part_of[order[i]] = i / per_part;
    return {GraphPartitionInstance(g, parts), sol};
}

inline std::pair<SubsetSumInstance, SubsetSelection> random_subset_sum(Rng& rng) {
    int n = rand_int(rng, 1, 6);
    std::vector<Coeff> values = random_costs(rng, n, 1, 9);
    SubsetSelection sol;
    Coeff target = 0;
    for (int i = 0; i < n; ++i)
        if (rand_bool(rng, 0.5)) {
            sol.indices.push_back(i);
            target += values[i];
        }
    return {SubsetSumInstance(values, target), sol};
}

inline std::pair<N3dmInstance, TripleMatching> random_n3dm(Rng& rng) {
    int n = rand_int(rng, 1, 3);
    std::vector<Coeff> xs = random_costs(rng, n, 1, 5);
    std::vector<Coeff> ys = random_costs(rng, n, 1, 5);
    Coeff target = 11 + rand_int(rng, 0, 4);
    std::vector<int> sigma(n), tau(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::iota(tau.begin(), tau.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::shuffle(tau.begin(), tau.end(), rng);
    std::vector<Coeff> zs(n);
    TripleMatching sol;
    for (int j = 0; j < n; ++j) {
        zs[j] = target - xs[sigma[j]] - ys[tau[j]];
        sol.triples.push_back({sigma[j], tau[j], j});
    }
    std::sort(sol.triples.begin(), sol.triples.end());
    return {N3dmInstance(xs, ys, zs, target), sol};
}

}  // namespace qubokit::testing

#endif
