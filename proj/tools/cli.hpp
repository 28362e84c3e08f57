#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvcoh::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kValidationError = 3,
  kUndefinedProduct = 4,
  kInternalError = 5,
};

/// Runs one subcommand. `args` excludes the program name. Model input is
/// read from --model or, when absent, from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace solvcoh::cli
