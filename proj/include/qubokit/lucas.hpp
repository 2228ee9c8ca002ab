// As-published formulation variants and the catalog of instances on which
// they reward infeasible configurations, together with the repaired models'
// behaviour on the same instances.
#ifndef QUBOKIT_LUCAS_HPP
#define QUBOKIT_LUCAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qubokit/encoders.hpp"

namespace qubokit {

// Vertex-count one-hot over sizes {2..max_degree}, so a clique of size
// max_degree+1 cannot be represented, and the weaker weight rules
// A > max_degree*B, C < A - max_degree*B.
EncodedModel build_clique_lucas(const CliqueInstance& inst, const PenaltyWeights& w,
                                const EncodingOptions& options = {});
// Same variable range as the corrected model (sizes up to max_degree+1) but
// still only the weaker published weight rules; admits C >= B.
EncodedModel build_clique_lucas_extended(const CliqueInstance& inst, const PenaltyWeights& w,
                                         const EncodingOptions& options = {});
// Both the one-hot term and the edge-conflict term share the weight A.
EncodedModel build_coloring_lucas(const ColoringInstance& inst, const PenaltyWeights& w,
                                  const EncodingOptions& options = {});
// Keeps per-edge inclusion flags y but has no one-hot constraint on the
// degree-slack variables z, so the degree term can be satisfied vacuously.
EncodedModel build_degree_mst_lucas(const DegreeMstInstance& inst, const PenaltyWeights& w,
                                    const EncodingOptions& options = {});
// Keeps the per-edge inclusion flags y that the corrected model drops.
EncodedModel build_steiner_lucas(const SteinerInstance& inst, const PenaltyWeights& w,
                                 const EncodingOptions& options = {});

enum class FvsVariant {
    original,     // the edge term exactly as printed, y inside the depth sum
    symmetrized,  // y moved outside the sum and mirrored over both arc directions
};
EncodedModel build_fvs_lucas(const FvsInstance& inst, const PenaltyWeights& w, FvsVariant variant,
                             const EncodingOptions& options = {});
// Arc-consistency term carries weight A inside H_A; reward term B*(1 - y_uv);
// weight rule only A > B.
EncodedModel build_fes_lucas(const FesInstance& inst, const PenaltyWeights& w,
                             const EncodingOptions& options = {});

// One reproducible defect demonstration: an instance, an explicit exploit
// assignment (as variable labels set to 1), and an honest feasible solution,
// evaluated under both the as-published and the corrected formulation.
struct CounterexampleCase {
    std::string name;
    std::string description;
    ProblemInstance instance;
    Formulation incorrect_formulation = Formulation::lucas;
    PenaltyWeights incorrect_weights;
    PenaltyWeights corrected_weights;
    // Variables set to 1 in the exploit assignment, as labels in the
    // as-published model's registry.
    std::vector<std::string> exploit_labels;
    // A feasible domain solution for the honest side.
    DomainSolution honest_solution;
    // When set, the honest configuration is spelled out variable by variable
    // instead of via canonical_encode (used when the honest configuration is
    // not domain-feasible, e.g. colouring with too few colours).
    std::optional<std::vector<std::string>> honest_labels;
    EncodingOptions options;
};

struct CaseVerification {
    std::string name;
    Coeff incorrect_exploit_energy = 0;
    Coeff incorrect_honest_energy = 0;
    Coeff corrected_exploit_energy = 0;
    Coeff corrected_honest_energy = 0;
    bool exploit_beats_honest_incorrect = false;  // the defect: exploit <= honest
    bool exploit_decodes_infeasible = false;
    bool corrected_blocks_exploit = false;  // exploit > honest under the fix
    bool ok() const {
        return exploit_beats_honest_incorrect && exploit_decodes_infeasible &&
               corrected_blocks_exploit;
    }
};

std::vector<CounterexampleCase> counterexample_catalog();
CaseVerification verify_case(const CounterexampleCase& c);

// Builds the as-published model for a catalog case.
EncodedModel build_incorrect_model(const CounterexampleCase& c);
// Builds the corrected model for a catalog case.
EncodedModel build_corrected_model(const CounterexampleCase& c);

}  // namespace qubokit

#endif
