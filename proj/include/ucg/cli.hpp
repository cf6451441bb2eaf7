#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucg::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseOrIo = 2,
  kFalsified = 3,
  kInternal = 4,
};

/// Runs one command. args excludes the program name. Standard input is read for the file "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucg::cli
