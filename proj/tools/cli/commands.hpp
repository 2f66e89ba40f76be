#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"

namespace cechkit::cli {

enum ExitCode : int { kComplete = 0, kError = 1, kInconclusive = 2 };

struct CommandResult {
  nlohmann::json report;
  std::string table;
  int exit_code = kComplete;
};

const std::vector<std::string>& command_names();

/// Runs one command on a parsed config. Library errors propagate; the caller
/// maps them to exit code 1.
CommandResult run_command(const std::string& command, const ProblemConfig& config,
                          unsigned threads = 1);

nlohmann::json config_json(const ProblemConfig& config);

}  // namespace cechkit::cli
