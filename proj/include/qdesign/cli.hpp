#pragma once

#include <iosfwd>
#include <string>

#include "qdesign/clifford.hpp"
#include "qdesign/matrix.hpp"

namespace qdesign {

/// One fully resolved CLI invocation. Running the same config twice
/// produces byte-identical reports.
struct RunConfig {
  std::string command;
  std::string group;
  double tol_equality = kEqualityTol;
  double tol_rank = kRankTol;
  std::size_t closure_limit = kDefaultClosureLimit;
  std::string format = "json";  // json, csv, or text
  std::string output;           // empty means the report stream
  unsigned threads = 1;         // 0 picks the hardware concurrency
  bool dump = false;            // append generator matrix dumps
};

/// Executes one subcommand. The report goes to out or to config.output;
/// diagnostics go to err only. Exit codes: 0 success, 2 invalid input,
/// 3 resource limit exceeded, 1 internal invariant violation.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv-level entry point used by the qdesign binary.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qdesign
