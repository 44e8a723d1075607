#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symbpow::cli {

enum ExitCode : int {
  kOk = 0,
  kAssertFailed = 1,
  kUsage = 2,
  kComputation = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hardware concurrency, capped by SYMB_THREADS when it holds a positive integer.
unsigned thread_budget();

}  // namespace symbpow::cli
