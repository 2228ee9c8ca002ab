#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qubokit/cli.hpp"
#include "qubokit/io.hpp"

using namespace qubokit;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("solve reports the exact optimum with a decoded solution") {
    CliRun r = run({"solve", fixture("clique_small.json")});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "problem: clique"));
    CHECK(contains(r.out, "formulation: corrected"));
    CHECK(contains(r.out, "weights: A=9 B=2 C=1 (admissible)"));
    CHECK(contains(r.out, "optimal assignments: 2"));
    CHECK(contains(r.out, "energy: -3"));
    // The lexicographically first optimal assignment is reported.
    CHECK(contains(r.out, "solution: clique {0, 2, 3}"));
    CHECK(contains(r.out, "feasible: yes"));
    CHECK(contains(r.out, "objective: -3"));

    // Repeat runs are byte for byte identical.
    CliRun again = run({"solve", fixture("clique_small.json")});
    CHECK(again.out == r.out);
    CHECK(again.code == 0);
}

TEST_CASE("annealing runs are reproducible from the seed") {
    std::vector<std::string> args{"solve", fixture("clique_small.json"), "--solver", "anneal",
                                  "--seed", "5"};
    CliRun first = run(args);
    CliRun second = run(args);
    CHECK(first.code == 0);
    CHECK(contains(first.out, "energy: -3"));
    CHECK(contains(first.out, "solver: anneal (seed 5"));
    CHECK(first.out == second.out);
}

TEST_CASE("verify-paper --all is green across the catalog") {
    CliRun r = run({"verify-paper", "--all"});
    CHECK(r.code == 0);
    CHECK(count_of(r.out, ": PASS") == 5);
    CHECK(count_of(r.out, "FAIL") == 0);
    CHECK(contains(r.out, "clique-weight-gap: PASS"));
    CHECK(contains(r.out, "mst-degree-slack: PASS"));

    CliRun single = run({"verify-paper", "fes-double-height"});
    CHECK(single.code == 0);
    CHECK(count_of(single.out, ": PASS") == 1);
    CHECK(contains(single.out, "as published: exploit 0 <= honest 1"));
    CHECK(contains(single.out, "corrected: exploit 7 > honest 1"));

    CliRun unknown = run({"verify-paper", "nonsense"});
    CHECK(unknown.code == 2);
    CHECK(contains(unknown.err, "unknown case"));

    CliRun missing = run({"verify-paper"});
    CHECK(missing.code == 2);
}

TEST_CASE("oracle prints the domain optimum") {
    CliRun r = run({"oracle", fixture("clique_small.json")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "optimum: -3"));
    CHECK(contains(r.out, "optimal solutions: 2"));
    CHECK(contains(r.out, "clique {0, 1, 2}"));
    CHECK(contains(r.out, "clique {0, 2, 3}"));

    // K5 with two colours has no proper colouring at all.
    CliRun infeasible = run({"oracle", fixture("coloring_k5.json")});
    CHECK(infeasible.code == 0);
    CHECK(contains(infeasible.out, "no feasible solution"));
}

TEST_CASE("build writes an importable QUBO file") {
    CliRun to_stdout = run({"build", fixture("clique_small.json")});
    CHECK(to_stdout.code == 0);
    CHECK(contains(to_stdout.out, "p qubo 7"));
    CHECK(contains(to_stdout.out, "c var 0 x[0]"));

    std::string path = "test_cli_build_output.qubo";
    CliRun to_file = run({"build", fixture("clique_small.json"), "-o", path});
    CHECK(to_file.code == 0);
    CHECK(contains(to_file.out, "wrote " + path));
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    in.close();
    ImportedQubo imported = import_qubo(buf.str());
    CHECK(imported.model.num_vars() == 7);
    CHECK(imported.registry.contains("y[4]"));
    std::remove(path.c_str());
}

TEST_CASE("weight flags override the document") {
    CliRun defaults = run({"build", fixture("clique_small.json"), "--default-weights"});
    CHECK(defaults.code == 0);
    CHECK(contains(defaults.out, "weights: A=8 B=2 C=1"));

    CliRun overridden = run({"build", fixture("clique_small.json"), "--weights", "12,3,2"});
    CHECK(overridden.code == 0);
    CHECK(contains(overridden.out, "weights: A=12 B=3 C=2"));

    CliRun inadmissible = run({"solve", fixture("clique_small.json"), "--weights", "10,2,3"});
    CHECK(inadmissible.code == 2);
    CHECK(contains(inadmissible.err, "inadmissible"));

    CliRun malformed = run({"solve", fixture("clique_small.json"), "--weights", "1,2"});
    CHECK(malformed.code == 2);
    CHECK(contains(malformed.err, "expects three integers"));
}

TEST_CASE("capacity and validation failures use distinct exit codes") {
    // The corrected spanning tree model has 45 variables, over the cap.
    CliRun capacity = run({"solve", fixture("mst_degree2.json")});
    CHECK(capacity.code == 3);
    CHECK(contains(capacity.err, "error:"));

    CliRun missing_file = run({"solve", "no_such_file.json"});
    CHECK(missing_file.code == 2);
    CHECK(contains(missing_file.err, "cannot read file"));

    CliRun bad_solver = run({"solve", fixture("clique_small.json"), "--solver", "quantum"});
    CHECK(bad_solver.code == 2);

    CliRun bad_encoding = run({"build", fixture("clique_small.json"), "--encoding", "nope"});
    CHECK(bad_encoding.code == 2);

    CliRun needs_lucas = run({"build", fixture("fvs_triangle.json"), "--encoding", "original"});
    CHECK(needs_lucas.code == 2);
    CHECK(contains(needs_lucas.err, "needs --lucas"));

    CliRun no_command = run({});
    CHECK(no_command.code == 2);
}

TEST_CASE("published variants are reachable from the command line") {
    CliRun lucas = run({"solve", fixture("fvs_triangle.json"), "--lucas", "--encoding",
                        "original"});
    CHECK(lucas.code == 0);
    CHECK(contains(lucas.out, "formulation: lucas"));
    // The defective model reaches energy 0 on an infeasible configuration.
    CHECK(contains(lucas.out, "energy: 0"));
    CHECK(contains(lucas.out, "feasible: no"));

    CliRun corrected = run({"solve", fixture("fvs_triangle.json")});
    CHECK(corrected.code == 0);
    CHECK(contains(corrected.out, "energy: 1"));
    CHECK(contains(corrected.out, "feasible: yes"));

    CliRun symmetrized = run({"solve", fixture("fvs_triangle.json"), "--lucas", "--encoding",
                              "symmetrized"});
    CHECK(symmetrized.code == 0);
    CHECK(contains(symmetrized.out, "formulation: lucas-symmetrized"));

    CliRun binary = run({"solve", fixture("clique_small.json"), "--encoding", "binary"});
    CHECK(binary.code == 0);
    CHECK(contains(binary.out, "energy: -3"));
}

TEST_CASE("help exits cleanly") {
    CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "build"));
    CHECK(contains(help.out, "solve"));
    CHECK(contains(help.out, "verify-paper"));
}
