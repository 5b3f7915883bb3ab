#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laurent::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
};

/// Runs one command line (without the program name). `in` feeds
/// `verify --jsonl -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace laurent::cli
