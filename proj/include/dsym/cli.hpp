#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsym {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,       // self-test failure, --verify mismatch or internal error
    kExitParse = 2,         // malformed input or command line
    kExitPrecondition = 3,  // input parsed but violates a precondition
};

/// Runs the `dsym` command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dsym
