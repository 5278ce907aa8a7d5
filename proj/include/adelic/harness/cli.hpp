#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "adelic/harness/report.hpp"

namespace adelic::harness {

enum ExitCode : int { kOk = 0, kValidation = 2, kResource = 3, kInternal = 4 };

struct ExperimentSpec {
  std::string command;
  std::string input;
  std::string roof;
  std::string output;
  std::optional<unsigned> max_n;
  std::optional<std::size_t> cap;
  std::string format = "json";
  /// zhang-check: divisor degree (defaults to d! vol of the domain).
  std::optional<std::string> degree;
  unsigned field_degree = 1;
};

/// Runs one analysis command, appending entries to `report` as they become
/// available so a partial report survives a ResourceError.
void execute(const ExperimentSpec& job, InvariantReport& report);

/// Full command-line entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace adelic::harness
