// Command-line front end: build, solve, oracle, verify-paper.
#ifndef QUBOKIT_CLI_HPP
#define QUBOKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qubokit {

// Runs one command (args exclude the program name) and returns the exit
// code: 0 success, 2 validation failure, 3 capacity exceeded, 4 a
// counterexample verification failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qubokit

#endif
