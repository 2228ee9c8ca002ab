// Exact and heuristic minimization of QUBO models.
#ifndef QUBOKIT_SOLVERS_HPP
#define QUBOKIT_SOLVERS_HPP

#include <cstdint>
#include <vector>

#include "qubokit/qubo.hpp"

namespace qubokit {

struct SolveStats {
    std::uint64_t evaluations = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
};

struct SolveResult {
    Coeff best_energy = 0;
    // For the exhaustive solver: every optimal assignment, in lexicographic
    // order (variable 0 most significant). For the annealer: the single best
    // assignment found.
    std::vector<Assignment> minima;
    SolveStats stats;
};

// Enumerates all 2^n assignments with incremental single-flip updates and
// returns every minimum. Refuses models with more than max_vars variables.
SolveResult exhaustive_solve(const QuboModel& model, int max_vars = 24);

struct AnnealParams {
    int num_restarts = 64;
    int num_sweeps = 5000;
    std::uint64_t seed = 1;
    // Geometric cooling; 0 picks the scale from the largest coefficient.
    double t_initial = 0.0;
    double t_final = 0.1;
};

// Simulated annealing with Metropolis sweeps. Deterministic for a fixed seed:
// every restart derives its own generator from (seed, restart index).
SolveResult anneal(const QuboModel& model, const AnnealParams& params = {});

}  // namespace qubokit

#endif
