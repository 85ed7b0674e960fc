#ifndef HOMOPS_CLI_HPP
#define HOMOPS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace homops::cli {

// Subcommand surface of the command-line front end. Every library operation
// is reachable from exactly one subcommand; the table is data so tests can
// assert coverage.
struct DispatchEntry {
    std::string module;
    std::string operation;
    std::string subcommand;
};

const std::vector<DispatchEntry>& dispatch_table();

// Parses and runs one command line (without the program name).
// Exit codes: 0 success, 1 domain error or failed verification
// (Unsupported2Torsion, DegreeTooSmall, BoundExceeded, Unknown — named in the
// report), 2 usage error (ParseError, ValueError, bad flags).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homops::cli

#endif
