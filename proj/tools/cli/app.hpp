#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gf2::cli {

// Exit statuses of the gf2mat tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,    // check mismatch, verification or I/O failure
  exit_invalid = 2,    // dimension or parameter error
  exit_bad_file = 3,   // malformed matrix file
};

// Entry point of the command-line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gf2::cli
