// Domain-level brute force, used as the independent ground truth for every
// encoding. Enumeration is over domain objects (subsets, assignments,
// permutations), never over QUBO bit patterns.
#ifndef QUBOKIT_ORACLE_HPP
#define QUBOKIT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qubokit/problems.hpp"

namespace qubokit {

struct OracleResult {
    // Empty optional when no feasible solution exists.
    std::optional<Coeff> best;
    // Every optimal solution, in deterministic enumeration order.
    std::vector<DomainSolution> solutions;
};

inline constexpr std::uint64_t kDefaultOracleCap = 1ull << 22;

// Exhausts the instance's domain search space (documented per problem:
// vertex/edge subsets, colour and part assignments, bin placements,
// permutation pairs). Throws CapacityError when the space exceeds size_cap.
OracleResult brute_force_optimum(const ProblemInstance& instance,
                                 std::uint64_t size_cap = kDefaultOracleCap);

// Deterministic small-instance streams for sweep tests.
// Connected graphs with 2..max_vertices vertices, one representative per
// isomorphism class.
std::vector<Graph> enumerate_small_connected_graphs(int max_vertices);
// All nonempty labeled arc sets on 2..max_vertices vertices (no dedup).
std::vector<Digraph> enumerate_small_digraphs(int max_vertices);
// Nonempty nondecreasing value multisets over 1..max_value, sizes 1..max_len.
std::vector<std::vector<Coeff>> enumerate_small_multisets(int max_len, Coeff max_value);
// All bin packing instances with 1..max_objects objects, capacities
// 1..max_capacity, nondecreasing weights, and one bin per object.
std::vector<BinPackingInstance> enumerate_small_bin_packing(int max_objects, Coeff max_capacity);

}  // namespace qubokit

#endif
