#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recon {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  exit_ok = 0,
  // analyze: not reconstructible; track: tracking failed;
  // oracle-check: deciders disagree.
  exit_negative = 1,
  exit_error = 2,
};

/// Entry point of the bcnrecon tool. `args` excludes the program name.
/// A file argument of "-" reads the network from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace recon
