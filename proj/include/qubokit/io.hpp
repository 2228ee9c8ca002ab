// Instance documents (JSON) and the textual QUBO interchange format.
#ifndef QUBOKIT_IO_HPP
#define QUBOKIT_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "qubokit/encoders.hpp"

namespace qubokit {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// One instance per document: a problem tag, the problem's payload, and
// optional weights and encoding choices.
struct InstanceDocument {
    ProblemInstance instance;
    std::optional<PenaltyWeights> weights;
    EncodingOptions options;
};

InstanceDocument parse_instance(const std::string& text);
std::string render_instance(const InstanceDocument& doc);

struct ImportedQubo {
    QuboModel model;
    VariableRegistry registry;
};

// Text layout: header `p qubo <n> <linear> <quadratic>`, then `c offset <v>`,
// one `c var <index> <label>` per variable, then the nonzero terms as
// `<i> <i> <h>` and `<i> <j> <J>` (i < j), each group in ascending order.
// Labels ride in comments, so the body is plain sparse triplet data.
std::string export_qubo(const QuboModel& model, const VariableRegistry& registry);
inline std::string export_qubo(const EncodedModel& em) {
    return export_qubo(em.model, em.registry);
}
ImportedQubo import_qubo(const std::string& text);

}  // namespace qubokit

#endif
