// Penalty encodings: builds a QUBO model for each supported problem, with the
// admissibility rules its penalty weights must satisfy, plus the canonical
// solution-to-bits encoding and the bits-to-solution decoding.
#ifndef QUBOKIT_ENCODERS_HPP
#define QUBOKIT_ENCODERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qubokit/problems.hpp"
#include "qubokit/qubo.hpp"
#include "qubokit/registry.hpp"

namespace qubokit {

struct WeightError : std::runtime_error {
    explicit WeightError(const std::string& what) : std::runtime_error(what) {}
};

struct EncodingError : std::runtime_error {
    explicit EncodingError(const std::string& what) : std::runtime_error(what) {}
};

// Positive integer penalty weights. Problems that use fewer than three
// constants ignore the rest.
struct PenaltyWeights {
    Coeff a = 1;
    Coeff b = 1;
    Coeff c = 1;
    bool operator==(const PenaltyWeights&) const = default;
};

// corrected: the repaired formulations. The lucas_* values select the
// as-published variants with their known defects (see lucas.hpp).
enum class Formulation { corrected, lucas, lucas_extended, lucas_symmetrized };

enum class CliqueEncoding { one_hot, binary };
enum class ColoringEncoding { one_hot, single_bit };

struct EncodingOptions {
    CliqueEncoding clique_encoding = CliqueEncoding::one_hot;
    ColoringEncoding coloring_encoding = ColoringEncoding::one_hot;
    // Drop the per-arc membership flags in the feedback edge set encoding;
    // tightens the weight rule to A > N*max_degree*B.
    bool fes_no_arc_flags = false;
    // Tests may disable the admissibility check to study bound tightness.
    bool check_weights = true;
    bool operator==(const EncodingOptions&) const = default;
};

struct EncodedModel {
    QuboModel model;
    VariableRegistry registry;
    ProblemInstance problem;
    PenaltyWeights weights;
    Formulation formulation = Formulation::corrected;
    EncodingOptions options;
};

// Smallest admissible weights for the corrected formulation: C first (when
// used), then B, then A, each one past its strict bound.
PenaltyWeights default_weights(const ProblemInstance& instance,
                               Formulation formulation = Formulation::corrected,
                               const EncodingOptions& options = {});

// Returns the violated admissibility inequalities, empty when admissible.
std::vector<std::string> validate_weights(const ProblemInstance& instance, const PenaltyWeights& w,
                                          Formulation formulation = Formulation::corrected,
                                          const EncodingOptions& options = {});

// Corrected builders. All throw WeightError when the weights violate the
// formulation's admissibility rules (unless options.check_weights is off) and
// InstanceError/EncodingError on degenerate input.
EncodedModel build_clique(const CliqueInstance& inst, const PenaltyWeights& w,
                          const EncodingOptions& options = {});
EncodedModel build_coloring(const ColoringInstance& inst, const PenaltyWeights& w,
                            const EncodingOptions& options = {});
// Weight-free two-colouring model over one bit per vertex; minimum counts
// improperly coloured edges.
EncodedModel build_two_coloring(const Graph& graph);
EncodedModel build_degree_mst(const DegreeMstInstance& inst, const PenaltyWeights& w,
                              const EncodingOptions& options = {});
EncodedModel build_steiner(const SteinerInstance& inst, const PenaltyWeights& w,
                           const EncodingOptions& options = {});
EncodedModel build_fvs(const FvsInstance& inst, const PenaltyWeights& w,
                       const EncodingOptions& options = {});
EncodedModel build_fes(const FesInstance& inst, const PenaltyWeights& w,
                       const EncodingOptions& options = {});
EncodedModel build_bin_packing(const BinPackingInstance& inst, const PenaltyWeights& w,
                               const EncodingOptions& options = {});
EncodedModel build_number_partition(const NumberPartitionInstance& inst, const PenaltyWeights& w,
                                    const EncodingOptions& options = {});
EncodedModel build_graph_partition(const GraphPartitionInstance& inst, const PenaltyWeights& w,
                                   const EncodingOptions& options = {});
EncodedModel build_subset_sum(const SubsetSumInstance& inst);
EncodedModel build_n3dm(const N3dmInstance& inst, const PenaltyWeights& w,
                        const EncodingOptions& options = {});

// Builds by instance type; used by the command line.
EncodedModel build_model(const ProblemInstance& instance, const PenaltyWeights& w,
                         Formulation formulation = Formulation::corrected,
                         const EncodingOptions& options = {});

// Deterministic assignment for a feasible solution: penalty terms all vanish.
// Trees are rooted at a centre vertex unless the solution names a root.
Assignment canonical_encode(const EncodedModel& em, const DomainSolution& sol);

// Reads the primary decision variables back out of an assignment. Never fails
// on arbitrary bit patterns; the report combines structural decode issues
// (for example a vertex with two colours) with domain feasibility.
std::pair<DomainSolution, FeasibilityReport> decode(const EncodedModel& em, const Assignment& a);

// Closed-form energy of a canonically encoded solution (every penalty term
// zero): for example -C*|clique|, B*tree cost, C*|feedback set|.
Coeff analytic_canonical_energy(const EncodedModel& em, const DomainSolution& sol);

// Resolves a list of labels to an assignment with those variables set to 1.
Assignment assignment_from_labels(const EncodedModel& em, const std::vector<std::string>& labels);

}  // namespace qubokit

#endif
