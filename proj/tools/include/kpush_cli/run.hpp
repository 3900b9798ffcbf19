#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "kpush_cli/emit.hpp"

namespace kpush::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsageError = 2,
  kNotPolynomial = 3,
  kInternalError = 4,
};

struct RunConfig {
  // pushforward | verify | expand | g2 | cohomology
  std::string command;
  // g2: table | matrix | class; cohomology: g2-integrals
  std::string action;
  std::string space;
  std::string variant;  // empty: every variant of the space (verify) or the first one
  std::string expression;
  std::uint64_t seed = 1;
  int trials = 20;
  int max_exponent = 2;
  Format format = Format::text;
  std::string output;  // empty: standard output
  bool determinant_only = false;
};

struct RunResult {
  int exit_code = kOk;
  std::string output;
  std::string error;
};

// Executes one command. Never throws; failures map to exit codes.
RunResult run(const RunConfig& config);

// Command-line front end: flags, optional key=value config file (--config),
// and the KPUSH_FORMAT environment variable as the default output format.
// Writes to out/err (or to --output) and returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kpush::cli
