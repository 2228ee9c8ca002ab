#include "qubokit/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "qubokit/io.hpp"
#include "qubokit/lucas.hpp"
#include "qubokit/oracle.hpp"
#include "qubokit/solvers.hpp"

namespace qubokit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerification = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommandFlags {
    std::string instance_path;
    std::string weights;  // "A,B,C"
    bool default_weights = false;
    bool lucas = false;
    std::string encoding;
    std::string output_path;
    std::string solver = "exhaustive";
    std::uint64_t seed = 1;
    int cap = 24;
};

PenaltyWeights parse_weights_flag(const std::string& text) {
    std::vector<Coeff> parts;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoll(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw ParseError("--weights expects three integers A,B,C; got \"" + text + "\"");
        }
    }
    if (parts.size() != 3)
        throw ParseError("--weights expects three integers A,B,C; got \"" + text + "\"");
    return PenaltyWeights{parts[0], parts[1], parts[2]};
}

Formulation resolve_formulation(const CommandFlags& f) {
    if (!f.lucas) {
        if (f.encoding == "original" || f.encoding == "symmetrized")
            throw ParseError("--encoding " + f.encoding + " selects an as-published variant and"
                             " needs --lucas");
        return Formulation::corrected;
    }
    return f.encoding == "symmetrized" ? Formulation::lucas_symmetrized : Formulation::lucas;
}

EncodingOptions resolve_options(const CommandFlags& f, const InstanceDocument& doc) {
    EncodingOptions o = doc.options;
    if (f.encoding.empty() || f.encoding == "original" || f.encoding == "symmetrized") return o;
    if (f.encoding == "binary" || f.encoding == "log") {
        o.clique_encoding = CliqueEncoding::binary;
    } else if (f.encoding == "single_bit") {
        o.coloring_encoding = ColoringEncoding::single_bit;
    } else if (f.encoding == "no_arc_flags") {
        o.fes_no_arc_flags = true;
    } else if (f.encoding == "one_hot") {
        o.clique_encoding = CliqueEncoding::one_hot;
        o.coloring_encoding = ColoringEncoding::one_hot;
    } else {
        throw ParseError("unknown encoding \"" + f.encoding + "\"");
    }
    return o;
}

const char* formulation_name(Formulation f) {
    switch (f) {
        case Formulation::corrected: return "corrected";
        case Formulation::lucas: return "lucas";
        case Formulation::lucas_extended: return "lucas-extended";
        case Formulation::lucas_symmetrized: return "lucas-symmetrized";
    }
    return "?";
}

EncodedModel prepare_model(const CommandFlags& f) {
    InstanceDocument doc = parse_instance(read_file(f.instance_path));
    Formulation form = resolve_formulation(f);
    EncodingOptions options = resolve_options(f, doc);
    PenaltyWeights w = !f.weights.empty() ? parse_weights_flag(f.weights)
                       : (!f.default_weights && doc.weights)
                           ? *doc.weights
                           : default_weights(doc.instance, form, options);
    return build_model(doc.instance, w, form, options);
}

void print_summary(std::ostream& out, const EncodedModel& em) {
    out << "problem: " << problem_name(em.problem) << '\n';
    out << "formulation: " << formulation_name(em.formulation) << '\n';
    out << "variables: " << em.model.num_vars() << '\n';
    // A successful build implies the active admissibility rules passed.
    out << "weights: A=" << em.weights.a << " B=" << em.weights.b << " C=" << em.weights.c
        << " (admissible)" << '\n';
}

int cmd_build(const CommandFlags& f, std::ostream& out) {
    EncodedModel em = prepare_model(f);
    print_summary(out, em);
    std::string text = export_qubo(em);
    if (f.output_path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(f.output_path);
    if (!file) throw ParseError("cannot write file: " + f.output_path);
    file << text;
    out << "wrote " << f.output_path << '\n';
    return kExitOk;
}

int cmd_solve(const CommandFlags& f, std::ostream& out) {
    EncodedModel em = prepare_model(f);
    print_summary(out, em);

    SolveResult result;
    if (f.solver == "exhaustive") {
        result = exhaustive_solve(em.model, f.cap);
        out << "solver: exhaustive (" << result.stats.evaluations << " assignments)\n";
        out << "optimal assignments: " << result.minima.size() << '\n';
    } else if (f.solver == "anneal") {
        AnnealParams params;
        params.seed = f.seed;
        result = anneal(em.model, params);
        out << "solver: anneal (seed " << params.seed << ", " << params.num_restarts
            << " restarts, " << params.num_sweeps << " sweeps)\n";
    } else {
        throw ParseError("unknown solver \"" + f.solver + "\" (use exhaustive or anneal)");
    }
    out << "energy: " << result.best_energy << '\n';

    auto [sol, report] = decode(em, result.minima.front());
    out << "solution: " << solution_to_string(sol) << '\n';
    if (report.ok()) {
        out << "feasible: yes\n";
        out << "objective: " << objective(em.problem, sol) << '\n';
    } else {
        out << "feasible: no\n";
        for (const auto& v : report.violations) out << "  - " << v << '\n';
    }
    return kExitOk;
}

int cmd_oracle(const std::string& path, std::ostream& out) {
    InstanceDocument doc = parse_instance(read_file(path));
    OracleResult result = brute_force_optimum(doc.instance);
    out << "problem: " << problem_name(doc.instance) << '\n';
    if (!result.best) {
        out << "no feasible solution\n";
        return kExitOk;
    }
    out << "optimum: " << *result.best << '\n';
    out << "optimal solutions: " << result.solutions.size() << '\n';
    for (const auto& s : result.solutions) out << "  " << solution_to_string(s) << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& case_name, bool all, std::ostream& out, std::ostream& err) {
    auto catalog = counterexample_catalog();
    std::vector<CounterexampleCase> selected;
    for (auto& c : catalog)
        if (all || c.name == case_name) selected.push_back(std::move(c));
    if (selected.empty()) {
        err << "error: unknown case \"" << case_name << "\"; available:";
        for (const auto& c : counterexample_catalog()) err << ' ' << c.name;
        err << '\n';
        return kExitValidation;
    }

    bool all_ok = true;
    for (const auto& c : selected) {
        CaseVerification v = verify_case(c);
        out << v.name << ": " << (v.ok() ? "PASS" : "FAIL") << '\n';
        out << "  as published: exploit " << v.incorrect_exploit_energy
            << (v.exploit_beats_honest_incorrect ? " <= " : " > ") << "honest "
            << v.incorrect_honest_energy << '\n';
        out << "  corrected: exploit " << v.corrected_exploit_energy
            << (v.corrected_blocks_exploit ? " > " : " <= ") << "honest "
            << v.corrected_honest_energy << '\n';
        out << "  exploit decodes infeasible: " << (v.exploit_decodes_infeasible ? "yes" : "no")
            << '\n';
        all_ok = all_ok && v.ok();
    }
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"QUBO toolkit: encode hard graph and partition problems as binary quadratic"
                 " models, solve them exactly or by annealing, and check the catalog of"
                 " published-formulation defects"};
    app.require_subcommand(1);

    CommandFlags flags;
    std::string verify_name;
    bool verify_all = false;

    auto add_model_flags = [&flags](CLI::App* cmd) {
        cmd->add_option("instance", flags.instance_path, "instance document (JSON)")->required();
        cmd->add_option("--weights", flags.weights, "penalty weights A,B,C");
        cmd->add_flag("--default-weights", flags.default_weights,
                      "derive admissible defaults, ignoring document weights");
        cmd->add_flag("--lucas", flags.lucas,
                      "build the formulation as originally published (defective)");
        cmd->add_option("--encoding", flags.encoding,
                        "one_hot|binary|single_bit|no_arc_flags|original|symmetrized");
    };

    CLI::App* build = app.add_subcommand("build", "Encode an instance document as a QUBO file");
    add_model_flags(build);
    build->add_option("-o,--output", flags.output_path,
                      "write the QUBO file here instead of standard output");

    CLI::App* solve =
        app.add_subcommand("solve", "Build a model, minimize it, decode and validate the result");
    add_model_flags(solve);
    solve->add_option("--solver", flags.solver, "exhaustive|anneal (default exhaustive)");
    solve->add_option("--seed", flags.seed, "annealer seed (default 1)");
    solve->add_option("--cap", flags.cap, "variable cap for the exhaustive solver (default 24)");

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force the domain optimum directly");
    oracle->add_option("instance", flags.instance_path, "instance document (JSON)")->required();

    CLI::App* verify = app.add_subcommand(
        "verify-paper", "Re-check the counterexamples against the as-published formulations");
    verify->add_option("case", verify_name, "catalog case name");
    verify->add_flag("--all", verify_all, "check every case");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (build->parsed()) return cmd_build(flags, out);
        if (solve->parsed()) return cmd_solve(flags, out);
        if (oracle->parsed()) return cmd_oracle(flags.instance_path, out);
        if (verify->parsed()) {
            if (!verify_all && verify_name.empty()) {
                err << "error: name a catalog case or pass --all\n";
                return kExitValidation;
            }
            return cmd_verify(verify_name, verify_all, out, err);
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    err << "error: no command given\n";
    return kExitValidation;
}

}  // namespace qubokit
