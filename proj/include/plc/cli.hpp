#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plc::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,         // library error; stderr carries its name
  kUsageError = 2,          // bad flags or arguments
  kInputError = 3,          // unreadable file or malformed JSON
  kVerificationFailed = 4,  // `verify` found discrepancies above tolerance
};

// Default comparison tolerance, overridable by the PLC_TOLERANCE environment
// variable.
double default_tolerance();

// Runs one subcommand. args excludes the program name. JSON goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plc::cli
