#include "qubokit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tree_util.hpp"

namespace qubokit {

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap,
                          const std::string& what) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base + 1)
            throw CapacityError(what + " search space exceeds cap");
        r *= base;
    }
    return r;
}

void require_space(std::uint64_t space, std::uint64_t cap, const std::string& what) {
    if (space > cap)
        throw CapacityError(what + " search space of " + std::to_string(space) +
                            " exceeds cap " + std::to_string(cap));
}

// Tracks the running optimum and every solution attaining it.
class Best {
public:
    void offer(Coeff value, DomainSolution sol) {
        if (!best_ || value < *best_) {
            best_ = value;
            solutions_.clear();
        }
        if (value == *best_) solutions_.push_back(std::move(sol));
    }
    OracleResult take() { return OracleResult{best_, std::move(solutions_)}; }

private:
    std::optional<Coeff> best_;
    std::vector<DomainSolution> solutions_;
};

// Calls fn with every length-n vector over {0,..,radix-1}, ascending.
template <class Fn>
void for_each_assignment(int n, int radix, Fn fn) {
    std::vector<int> a(n, 0);
    while (true) {
        fn(a);
        int i = 0;
        while (i < n && ++a[i] == radix) a[i++] = 0;
        if (i == n) break;
    }
}

OracleResult oracle_clique(const CliqueInstance& inst, std::uint64_t cap) {
    int n = inst.graph.num_vertices();
    require_space(checked_pow(2, n, cap, "clique"), cap, "clique");
    ProblemInstance pi = inst;
    Best best;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        CliqueSet sol;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) sol.vertices.push_back(v);
        if (check_feasible(pi, sol).ok())
            best.offer(-static_cast<Coeff>(sol.vertices.size()), sol);
    }
    return best.take();
}

OracleResult oracle_coloring(const ColoringInstance& inst, std::uint64_t cap) {
    int n = inst.graph.num_vertices();
    require_space(checked_pow(inst.num_colors, n, cap, "colouring"), cap, "colouring");
    ProblemInstance pi = inst;
    Best best;
    for_each_assignment(n, inst.num_colors, [&](const std::vector<int>& a) {
        Coloring sol;
        for (int c : a) sol.color_of.emplace_back(c);
        if (check_feasible(pi, sol).ok()) best.offer(0, sol);
    });
    return best.take();
}

template <class Inst>
OracleResult oracle_tree(const Inst& inst, std::uint64_t cap, const char* what) {
    const auto& edges = inst.graph.graph.edges();
    int m = static_cast<int>(edges.size());
    require_space(checked_pow(2, m, cap, what), cap, what);
    ProblemInstance pi = inst;
    Best best;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        RootedTree sol;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) sol.edges.push_back(edges[e]);
        if (!check_feasible(pi, sol).ok()) continue;
        if (!sol.edges.empty()) {
            std::set<int> vs;
            for (const auto& [u, v] : sol.edges) { vs.insert(u); vs.insert(v); }
            sol.root = detail::tree_centre(vs, detail::adjacency_of(sol.edges));
        }
        best.offer(objective(pi, sol), sol);
    }
    return best.take();
}

OracleResult oracle_fvs(const FvsInstance& inst, std::uint64_t cap) {
    int n = inst.graph.num_vertices();
    require_space(checked_pow(2, n, cap, "feedback vertex set"), cap, "feedback vertex set");
    ProblemInstance pi = inst;
    Best best;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        FeedbackVertexSet sol;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) sol.vertices.push_back(v);
        if (check_feasible(pi, sol).ok())
            best.offer(static_cast<Coeff>(sol.vertices.size()), sol);
    }
    return best.take();
}

OracleResult oracle_fes(const FesInstance& inst, std::uint64_t cap) {
    const auto& arcs = inst.digraph.arcs();
    int m = static_cast<int>(arcs.size());
    require_space(checked_pow(2, m, cap, "feedback edge set"), cap, "feedback edge set");
    ProblemInstance pi = inst;
    Best best;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        FeedbackEdgeSet sol;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) sol.arcs.push_back(arcs[e]);
        if (check_feasible(pi, sol).ok())
            best.offer(static_cast<Coeff>(sol.arcs.size()), sol);
    }
    return best.take();
}

OracleResult oracle_bins(const BinPackingInstance& inst, std::uint64_t cap) {
    int k = static_cast<int>(inst.item_weights.size());
    require_space(checked_pow(inst.num_bins, k, cap, "bin packing"), cap, "bin packing");
    ProblemInstance pi = inst;
    Best best;
    for_each_assignment(k, inst.num_bins, [&](const std::vector<int>& a) {
        BinAssignment sol;
        for (int b : a) sol.bin_of.emplace_back(b);
        if (check_feasible(pi, sol).ok()) best.offer(objective(pi, sol), sol);
    });
    return best.take();
}

template <class Inst>
OracleResult oracle_partition(const Inst& inst, int num_elements, std::uint64_t cap,
                              const char* what) {
    require_space(checked_pow(inst.num_parts, num_elements, cap, what), cap, what);
    ProblemInstance pi = inst;
    Best best;
    for_each_assignment(num_elements, inst.num_parts, [&](const std::vector<int>& a) {
        Partition sol;
        sol.num_parts = inst.num_parts;
        for (int p : a) sol.part_of.emplace_back(p);
        if (check_feasible(pi, sol).ok()) best.offer(objective(pi, sol), sol);
    });
    return best.take();
}

OracleResult oracle_subset(const SubsetSumInstance& inst, std::uint64_t cap) {
    int n = static_cast<int>(inst.values.size());
    require_space(checked_pow(2, n, cap, "subset sum"), cap, "subset sum");
    ProblemInstance pi = inst;
    Best best;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        SubsetSelection sol;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) sol.indices.push_back(i);
        if (check_feasible(pi, sol).ok()) best.offer(0, sol);
    }
    return best.take();
}

OracleResult oracle_n3dm(const N3dmInstance& inst, std::uint64_t cap) {
    int n = static_cast<int>(inst.xs.size());
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    require_space(fact * fact, cap, "matching");
    ProblemInstance pi = inst;
    Best best;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<int> tau(n);
        std::iota(tau.begin(), tau.end(), 0);
        do {
            TripleMatching sol;
            for (int i = 0; i < n; ++i) sol.triples.push_back({i, sigma[i], tau[i]});
            if (check_feasible(pi, sol).ok()) best.offer(0, sol);
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best.take();
}

}  // namespace

OracleResult brute_force_optimum(const ProblemInstance& instance, std::uint64_t size_cap) {
    return std::visit(
        [&](const auto& inst) -> OracleResult {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, CliqueInstance>) return oracle_clique(inst, size_cap);
            else if constexpr (std::is_same_v<T, ColoringInstance>) return oracle_coloring(inst, size_cap);
            else if constexpr (std::is_same_v<T, DegreeMstInstance>)
                return oracle_tree(inst, size_cap, "spanning tree");
            else if constexpr (std::is_same_v<T, SteinerInstance>)
                return oracle_tree(inst, size_cap, "Steiner tree");
            else if constexpr (std::is_same_v<T, FvsInstance>) return oracle_fvs(inst, size_cap);
            else if constexpr (std::is_same_v<T, FesInstance>) return oracle_fes(inst, size_cap);
            else if constexpr (std::is_same_v<T, BinPackingInstance>) return oracle_bins(inst, size_cap);
            else if constexpr (std::is_same_v<T, NumberPartitionInstance>)
                return oracle_partition(inst, static_cast<int>(inst.values.size()), size_cap,
                                        "number partitioning");
            else if constexpr (std::is_same_v<T, GraphPartitionInstance>)
                return oracle_partition(inst, inst.graph.num_vertices(), size_cap,
                                        "graph partitioning");
            else if constexpr (std::is_same_v<T, SubsetSumInstance>) return oracle_subset(inst, size_cap);
            else return oracle_n3dm(inst, size_cap);
        },
        instance);
}

std::vector<Graph> enumerate_small_connected_graphs(int max_vertices) {
    std::vector<Graph> out;
    for (int n = 2; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
        int m = static_cast<int>(all_edges.size());

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::set<std::uint64_t> seen;
        for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
            // Canonical key: minimum edge bitmask over all vertex relabelings.
            std::uint64_t canon = ~0ull;
            std::vector<int> p = perm;
            do {
                std::uint64_t relabeled = 0;
                for (int e = 0; e < m; ++e) {
                    if (!(mask >> e & 1)) continue;
                    int u = p[all_edges[e].first], v = p[all_edges[e].second];
                    if (u > v) std::swap(u, v);
                    auto it = std::lower_bound(all_edges.begin(), all_edges.end(),
                                               std::make_pair(u, v));
                    relabeled |= 1ull << (it - all_edges.begin());
                }
                canon = std::min(canon, relabeled);
            } while (std::next_permutation(p.begin(), p.end()));
            if (!seen.insert(canon).second || canon != mask) continue;

            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < m; ++e)
                if (mask >> e & 1) edges.push_back(all_edges[e]);
            Graph g(n, edges);
            if (g.connected()) out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Digraph> enumerate_small_digraphs(int max_vertices) {
    std::vector<Digraph> out;
    for (int n = 2; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> all_arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) all_arcs.emplace_back(u, v);
        int m = static_cast<int>(all_arcs.size());
        for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
            std::vector<std::pair<int, int>> arcs;
            for (int e = 0; e < m; ++e)
                if (mask >> e & 1) arcs.push_back(all_arcs[e]);
            out.emplace_back(n, arcs);
        }
    }
    return out;
}

std::vector<std::vector<Coeff>> enumerate_small_multisets(int max_len, Coeff max_value) {
    std::vector<std::vector<Coeff>> out;
    std::vector<Coeff> current;
    // Depth-first over nondecreasing sequences, shortest first within a prefix.
    auto rec = [&](auto&& self, Coeff min_value) -> void {
        if (!current.empty()) out.push_back(current);
        if (static_cast<int>(current.size()) == max_len) return;
        for (Coeff v = min_value; v <= max_value; ++v) {
            current.push_back(v);
            self(self, v);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<BinPackingInstance> enumerate_small_bin_packing(int max_objects, Coeff max_capacity) {
    std::vector<BinPackingInstance> out;
    for (Coeff cap = 1; cap <= max_capacity; ++cap)
        for (const auto& weights : enumerate_small_multisets(max_objects, cap))
            out.emplace_back(weights, cap, static_cast<int>(weights.size()));
    return out;
}

}  // namespace qubokit
