// Internal helpers for rooting trees and forests.
#ifndef QUBOKIT_SRC_TREE_UTIL_HPP
#define QUBOKIT_SRC_TREE_UTIL_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace qubokit::detail {

using EdgeList = std::vector<std::pair<int, int>>;
using Adjacency = std::map<int, std::vector<int>>;

inline Adjacency adjacency_of(const EdgeList& edges) {
    Adjacency adj;
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

// Breadth-first depths from root; only vertices reachable through the edge
// list appear in the result.
inline std::map<int, int> bfs_depths(const Adjacency& adj, int root) {
    std::map<int, int> depth;
    depth[root] = 0;
    std::vector<int> frontier{root};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier) {
            auto it = adj.find(v);
            if (it == adj.end()) continue;
            for (int u : it->second)
                if (!depth.count(u)) {
                    depth[u] = depth[v] + 1;
                    next.push_back(u);
                }
        }
        frontier = std::move(next);
    }
    return depth;
}

// Centre of a tree given by its edges and vertex set: the vertex minimizing
// eccentricity, lowest index on ties. Works on a single-vertex "tree" too.
inline int tree_centre(const std::set<int>& vertices, const Adjacency& adj) {
    int best = -1;
    int best_ecc = -1;
    for (int v : vertices) {
        auto depths = bfs_depths(adj, v);
        int ecc = 0;
        for (const auto& [u, d] : depths)
            if (vertices.count(u) && d > ecc) ecc = d;
        if (best == -1 || ecc < best_ecc) {
            best = v;
            best_ecc = ecc;
        }
    }
    return best;
}

}  // namespace qubokit::detail

#endif
