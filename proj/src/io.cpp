#include "qubokit/io.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qubokit {

namespace {

using json = nlohmann::ordered_json;

const json& require(const json& j, const char* key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError("missing field \"" + std::string(key) + "\" in " + ctx);
    return *it;
}

int to_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
    return j.get<int>();
}

Coeff to_coeff(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
    return j.get<Coeff>();
}

std::vector<Coeff> to_coeffs(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of integers");
    std::vector<Coeff> out;
    for (const auto& e : j) out.push_back(to_coeff(e, what + " entry"));
    return out;
}

std::vector<int> to_ints(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of integers");
    std::vector<int> out;
    for (const auto& e : j) out.push_back(to_int(e, what + " entry"));
    return out;
}

std::vector<std::pair<int, int>> to_pairs(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of [u, v] pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("every entry of " + what + " must be a pair [u, v]");
        out.emplace_back(to_int(e[0], what + " endpoint"), to_int(e[1], what + " endpoint"));
    }
    return out;
}

Graph parse_graph(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ParseError(ctx + " must be an object");
    return Graph(to_int(require(j, "num_vertices", ctx), ctx + ".num_vertices"),
                 to_pairs(require(j, "edges", ctx), ctx + ".edges"));
}

WeightedGraph parse_weighted_graph(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ParseError(ctx + " must be an object");
    return WeightedGraph(to_int(require(j, "num_vertices", ctx), ctx + ".num_vertices"),
                         to_pairs(require(j, "edges", ctx), ctx + ".edges"),
                         to_coeffs(require(j, "costs", ctx), ctx + ".costs"));
}

Digraph parse_digraph(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ParseError(ctx + " must be an object");
    return Digraph(to_int(require(j, "num_vertices", ctx), ctx + ".num_vertices"),
                   to_pairs(require(j, "arcs", ctx), ctx + ".arcs"));
}

int optional_depth(const json& doc) {
    return doc.contains("depth_bound") ? to_int(doc["depth_bound"], "depth_bound") : -1;
}

ProblemInstance parse_payload(const std::string& tag, const json& doc) {
    if (tag == "clique") return CliqueInstance(parse_graph(require(doc, "graph", tag), "graph"));
    if (tag == "coloring")
        return ColoringInstance(parse_graph(require(doc, "graph", tag), "graph"),
                                to_int(require(doc, "num_colors", tag), "num_colors"));
    if (tag == "degree_mst")
        return DegreeMstInstance(parse_weighted_graph(require(doc, "graph", tag), "graph"),
                                 to_int(require(doc, "max_degree", tag), "max_degree"),
                                 optional_depth(doc));
    if (tag == "steiner")
        return SteinerInstance(parse_weighted_graph(require(doc, "graph", tag), "graph"),
                               to_ints(require(doc, "terminals", tag), "terminals"),
                               optional_depth(doc));
    if (tag == "fvs")
        return FvsInstance(parse_graph(require(doc, "graph", tag), "graph"), optional_depth(doc));
    if (tag == "fes") return FesInstance(parse_digraph(require(doc, "digraph", tag), "digraph"));
    if (tag == "bin_packing")
        return BinPackingInstance(to_coeffs(require(doc, "item_weights", tag), "item_weights"),
                                  to_coeff(require(doc, "capacity", tag), "capacity"),
                                  to_int(require(doc, "num_bins", tag), "num_bins"));
    if (tag == "number_partition")
        return NumberPartitionInstance(to_coeffs(require(doc, "values", tag), "values"),
                                       to_int(require(doc, "num_parts", tag), "num_parts"));
    if (tag == "graph_partition")
        return GraphPartitionInstance(parse_graph(require(doc, "graph", tag), "graph"),
                                      to_int(require(doc, "num_parts", tag), "num_parts"));
    if (tag == "subset_sum")
        return SubsetSumInstance(to_coeffs(require(doc, "values", tag), "values"),
                                 to_coeff(require(doc, "target", tag), "target"));
    if (tag == "n3dm")
        return N3dmInstance(to_coeffs(require(doc, "x", tag), "x"),
                            to_coeffs(require(doc, "y", tag), "y"),
                            to_coeffs(require(doc, "z", tag), "z"),
                            to_coeff(require(doc, "b", tag), "b"));
    throw ParseError("unknown problem tag \"" + tag + "\"");
}

json render_pairs(const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (const auto& [u, v] : pairs) out.push_back(json::array({u, v}));
    return out;
}

json render_graph(const Graph& g) {
    json out;
    out["num_vertices"] = g.num_vertices();
    out["edges"] = render_pairs(g.edges());
    return out;
}

json render_weighted_graph(const WeightedGraph& g) {
    json out = render_graph(g.graph);
    out["costs"] = g.costs;
    return out;
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid instance document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
    const json& jtag = require(doc, "problem", "instance document");
    if (!jtag.is_string()) throw ParseError("field \"problem\" must be a string");
    std::string tag = jtag.get<std::string>();

    InstanceDocument out{parse_payload(tag, doc), std::nullopt, EncodingOptions{}};

    if (doc.contains("weights")) {
        const json& jw = doc["weights"];
        if (!jw.is_object()) throw ParseError("field \"weights\" must be an object");
        out.weights = PenaltyWeights{to_coeff(require(jw, "A", "weights"), "weights.A"),
                                     to_coeff(require(jw, "B", "weights"), "weights.B"),
                                     to_coeff(require(jw, "C", "weights"), "weights.C")};
    }
    if (doc.contains("encoding")) {
        const json& je = doc["encoding"];
        if (!je.is_string()) throw ParseError("field \"encoding\" must be a string");
        std::string enc = je.get<std::string>();
        if (enc == "binary" || enc == "log")
            out.options.clique_encoding = CliqueEncoding::binary;
        else if (enc == "single_bit")
            out.options.coloring_encoding = ColoringEncoding::single_bit;
        else if (enc == "no_arc_flags")
            out.options.fes_no_arc_flags = true;
        else if (enc != "one_hot")
            throw ParseError("unknown encoding \"" + enc + "\"");
    }
    return out;
}

std::string render_instance(const InstanceDocument& doc) {
    json j;
    j["problem"] = problem_name(doc.instance);

    if (const auto* p = std::get_if<CliqueInstance>(&doc.instance)) {
        j["graph"] = render_graph(p->graph);
    } else if (const auto* p = std::get_if<ColoringInstance>(&doc.instance)) {
        j["graph"] = render_graph(p->graph);
        j["num_colors"] = p->num_colors;
    } else if (const auto* p = std::get_if<DegreeMstInstance>(&doc.instance)) {
        j["graph"] = render_weighted_graph(p->graph);
        j["max_degree"] = p->max_degree;
        j["depth_bound"] = p->depth_bound;
    } else if (const auto* p = std::get_if<SteinerInstance>(&doc.instance)) {
        j["graph"] = render_weighted_graph(p->graph);
        j["terminals"] = p->terminals;
        j["depth_bound"] = p->depth_bound;
    } else if (const auto* p = std::get_if<FvsInstance>(&doc.instance)) {
        j["graph"] = render_graph(p->graph);
        j["depth_bound"] = p->depth_bound;
    } else if (const auto* p = std::get_if<FesInstance>(&doc.instance)) {
        json d;
        d["num_vertices"] = p->digraph.num_vertices();
        d["arcs"] = render_pairs(p->digraph.arcs());
        j["digraph"] = d;
    } else if (const auto* p = std::get_if<BinPackingInstance>(&doc.instance)) {
        j["item_weights"] = p->item_weights;
        j["capacity"] = p->capacity;
        j["num_bins"] = p->num_bins;
    } else if (const auto* p = std::get_if<NumberPartitionInstance>(&doc.instance)) {
        j["values"] = p->values;
        j["num_parts"] = p->num_parts;
    } else if (const auto* p = std::get_if<GraphPartitionInstance>(&doc.instance)) {
        j["graph"] = render_graph(p->graph);
        j["num_parts"] = p->num_parts;
    } else if (const auto* p = std::get_if<SubsetSumInstance>(&doc.instance)) {
        j["values"] = p->values;
        j["target"] = p->target;
    } else {
        const auto& n3dm = std::get<N3dmInstance>(doc.instance);
        j["x"] = n3dm.xs;
        j["y"] = n3dm.ys;
        j["z"] = n3dm.zs;
        j["b"] = n3dm.target;
    }

    if (doc.weights)
        j["weights"] = {{"A", doc.weights->a}, {"B", doc.weights->b}, {"C", doc.weights->c}};
    if (doc.options.clique_encoding == CliqueEncoding::binary) j["encoding"] = "binary";
    if (doc.options.coloring_encoding == ColoringEncoding::single_bit)
        j["encoding"] = "single_bit";
    if (doc.options.fes_no_arc_flags) j["encoding"] = "no_arc_flags";
    return j.dump(2) + "\n";
}

std::string export_qubo(const QuboModel& model, const VariableRegistry& registry) {
    if (registry.size() != model.num_vars())
        throw DimensionError("registry has " + std::to_string(registry.size()) +
                             " labels, model has " + std::to_string(model.num_vars()) +
                             " variables");
    std::ostringstream out;
    out << "p qubo " << model.num_vars() << ' ' << model.num_linear_nonzero() << ' '
        << model.num_quadratic_nonzero() << '\n';
    out << "c offset " << model.offset() << '\n';
    for (Index i = 0; i < model.num_vars(); ++i) out << "c var " << i << ' ' << registry.label(i)
                                                     << '\n';
    for (Index i = 0; i < model.num_vars(); ++i)
        if (model.linear(i) != 0) out << i << ' ' << i << ' ' << model.linear(i) << '\n';
    for (const auto& [key, coeff] : model.quadratic_terms())
        out << key.first << ' ' << key.second << ' ' << coeff << '\n';
    return out.str();
}

ImportedQubo import_qubo(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty model file");

    std::istringstream header(line);
    std::string p, kind;
    long long nv = -1, nl = -1, nq = -1;
    std::string extra;
    if (!(header >> p >> kind >> nv >> nl >> nq) || p != "p" || kind != "qubo" || nv < 0 ||
        nl < 0 || nq < 0 || (header >> extra))
        throw ParseError("bad header line: " + line);

    ImportedQubo out{QuboModel(static_cast<Index>(nv)), VariableRegistry{}};
    bool have_offset = false;
    bool in_body = false;
    long long linear_seen = 0, quad_seen = 0;
    long long last_linear = -1;
    std::pair<long long, long long> last_quad{-1, -1};

    while (std::getline(in, line)) {
        if (line.empty()) throw ParseError("blank line in model file");
        if (line[0] == 'c') {
            if (in_body) throw ParseError("comment after body lines: " + line);
            std::istringstream c(line);
            std::string ctag, what;
            c >> ctag >> what;
            if (what == "offset") {
                Coeff v;
                if (!(c >> v) || (c >> extra) || have_offset)
                    throw ParseError("bad offset line: " + line);
                out.model.add_offset(v);
                have_offset = true;
            } else if (what == "var") {
                long long idx;
                std::string label;
                if (!(c >> idx >> label) || (c >> extra))
                    throw ParseError("bad variable line: " + line);
                if (idx != static_cast<long long>(out.registry.size()) || idx >= nv)
                    throw ParseError("variable labels must appear once, in index order: " + line);
                out.registry.add(label);
            }
            // Other comment lines are permitted and ignored.
            continue;
        }
        in_body = true;
        std::istringstream body(line);
        long long i = -1, j = -1;
        Coeff v = 0;
        if (!(body >> i >> j >> v) || (body >> extra)) throw ParseError("bad body line: " + line);
        if (i < 0 || j < 0 || i >= nv || j >= nv)
            throw ParseError("variable index out of range: " + line);
        if (i > j) throw ParseError("pair must satisfy i <= j: " + line);
        if (v == 0) throw ParseError("zero coefficient: " + line);
        if (i == j) {
            if (quad_seen > 0) throw ParseError("linear term after quadratic terms: " + line);
            if (i <= last_linear)
                throw ParseError("linear terms out of order or duplicated: " + line);
            last_linear = i;
            out.model.add_linear(static_cast<Index>(i), v);
            ++linear_seen;
        } else {
            if (std::make_pair(i, j) <= last_quad)
                throw ParseError("quadratic terms out of order or duplicated: " + line);
            last_quad = {i, j};
            out.model.add_quadratic(static_cast<Index>(i), static_cast<Index>(j), v);
            ++quad_seen;
        }
    }

    if (!have_offset) throw ParseError("missing offset comment");
    if (static_cast<long long>(out.registry.size()) != nv)
        throw ParseError("expected " + std::to_string(nv) + " variable labels, found " +
                         std::to_string(out.registry.size()));
    if (linear_seen != nl || quad_seen != nq)
        throw ParseError("header announces " + std::to_string(nl) + " linear and " +
                         std::to_string(nq) + " quadratic terms, body has " +
                         std::to_string(linear_seen) + " and " + std::to_string(quad_seen));
    return out;
}

}  // namespace qubokit
