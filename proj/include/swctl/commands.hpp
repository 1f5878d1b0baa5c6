#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "swctl/generate.hpp"
#include "swctl/switched.hpp"

namespace swctl::cli {

enum ExitCode : int {
  kControllable = 0,
  kUncontrollable = 1,
  kInputError = 2,
};

struct AnalyzeOptions {
  std::string path;
  bool certify = false;
  std::uint64_t seed = 0;
  unsigned trials = kDefaultTrials;
  std::uint64_t bound = kDefaultBound;
  bool json = false;
  bool enumerate = false;
  std::size_t cap = kDefaultEnumerationCap;
};

struct OracleOptions {
  std::string path;
  std::size_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  std::uint64_t bound = kDefaultBound;
};

/// Exit code 0 when controllable, 1 when not, 2 on any input error.
int cmd_analyze(const AnalyzeOptions &opts, std::ostream &out, std::ostream &err);

/// Exit code 0 when every check agrees, 1 on any disagreement, 2 on input
/// errors or when the instance exceeds the cap.
int cmd_oracle(const OracleOptions &opts, std::ostream &out, std::ostream &err);

/// Writes a generated document to out. Exit code 0, or 2 for infeasible
/// parameters.
int cmd_gen(const GenParams &params, std::ostream &out, std::ostream &err);

} // namespace swctl::cli
