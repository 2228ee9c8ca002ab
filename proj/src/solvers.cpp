#include "qubokit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <random>

namespace qubokit {

namespace {

using AdjacencyRows = std::vector<std::vector<std::pair<Index, Coeff>>>;

AdjacencyRows adjacency_rows(const QuboModel& model) {
    AdjacencyRows rows(model.num_vars());
    for (const auto& [key, coeff] : model.quadratic_terms()) {
        rows[key.first].emplace_back(key.second, coeff);
        rows[key.second].emplace_back(key.first, coeff);
    }
    return rows;
}

Coeff abs_coeff(Coeff c) { return c < 0 ? checked_sub(0, c) : c; }

// Proves that no partial energy can overflow: every reachable energy is
// bounded in magnitude by |offset| + sum |h_i| + sum |J_ij|, so if that sum
// is representable the incremental updates below are safe in plain int64.
void check_energy_range(const QuboModel& model) {
    Coeff bound = abs_coeff(model.offset());
    for (Coeff c : model.linear_terms()) bound = checked_add(bound, abs_coeff(c));
    for (const auto& [key, coeff] : model.quadratic_terms())
        bound = checked_add(bound, abs_coeff(coeff));
    (void)bound;
}

// Energy change of flipping variable i in assignment a.
Coeff flip_delta(const QuboModel& model, const AdjacencyRows& rows, const Assignment& a, Index i) {
    Coeff gain = model.linear(i);
    for (const auto& [j, coeff] : rows[i])
        if (a[j]) gain += coeff;
    return a[i] ? -gain : gain;
}

}  // namespace

SolveResult exhaustive_solve(const QuboModel& model, int max_vars) {
    const Index n = model.num_vars();
    if (max_vars < 0 || n > static_cast<Index>(max_vars))
        throw CapacityError("exhaustive search over " + std::to_string(n) +
                            " variables exceeds the cap of " + std::to_string(max_vars) +
                            " (2^" + std::to_string(n) + " assignments)");
    check_energy_range(model);
    AdjacencyRows rows = adjacency_rows(model);

    SolveResult result;
    Assignment a(n, 0);
    Coeff current = model.offset();
    result.best_energy = current;
    result.minima.push_back(a);
    result.stats.evaluations = 1;

    // Gray-code walk: step k flips the lowest set bit of k, visiting every
    // assignment exactly once with one flip per step.
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        Index i = static_cast<Index>(std::countr_zero(k));
        current += flip_delta(model, rows, a, i);
        a[i] ^= 1;
        ++result.stats.evaluations;
        if (current < result.best_energy) {
            result.best_energy = current;
            result.minima.clear();
            result.minima.push_back(a);
        } else if (current == result.best_energy) {
            result.minima.push_back(a);
        }
    }
    std::sort(result.minima.begin(), result.minima.end());
    return result;
}

SolveResult anneal(const QuboModel& model, const AnnealParams& params) {
    if (params.num_restarts < 1 || params.num_sweeps < 1)
        throw std::invalid_argument("anneal needs at least one restart and one sweep");
    check_energy_range(model);
    const Index n = model.num_vars();
    AdjacencyRows rows = adjacency_rows(model);

    double t_initial = params.t_initial;
    if (t_initial <= 0.0) {
        Coeff scale = 1;
        for (Coeff c : model.linear_terms()) scale = std::max(scale, abs_coeff(c));
        for (const auto& [key, coeff] : model.quadratic_terms())
            scale = std::max(scale, abs_coeff(coeff));
        t_initial = static_cast<double>(scale);
    }
    const double t_final = std::min(std::max(params.t_final, 1e-6), t_initial);
    const double cooling = params.num_sweeps > 1
                               ? std::pow(t_final / t_initial, 1.0 / (params.num_sweeps - 1))
                               : 1.0;

    SolveResult result;
    result.stats.restarts = params.num_restarts;
    result.stats.seed = params.seed;
    bool have_best = false;

    for (int restart = 0; restart < params.num_restarts; ++restart) {
        std::seed_seq seq{params.seed, static_cast<std::uint64_t>(restart)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        Assignment a(n, 0);
        for (Index i = 0; i < n; ++i) a[i] = static_cast<std::uint8_t>(rng() & 1);
        Coeff current = energy(model, a);
        Assignment local_best = a;
        Coeff local_best_energy = current;

        double t = t_initial;
        for (int sweep = 0; sweep < params.num_sweeps; ++sweep, t *= cooling) {
            for (Index i = 0; i < n; ++i) {
                Coeff delta = flip_delta(model, rows, a, i);
                ++result.stats.evaluations;
                if (delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / t)) {
                    a[i] ^= 1;
                    current += delta;
                    if (current < local_best_energy) {
                        local_best_energy = current;
                        local_best = a;
                    }
                }
            }
        }

        if (!have_best || local_best_energy < result.best_energy ||
            (local_best_energy == result.best_energy && local_best < result.minima.front())) {
            have_best = true;
            result.best_energy = local_best_energy;
            result.minima.assign(1, local_best);
        }
    }
    return result;
}

}  // namespace qubokit
