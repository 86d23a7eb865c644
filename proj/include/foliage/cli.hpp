#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "foliage/json_io.hpp"

namespace foliage::cli {

enum class Command {
  CheckIntegrable,
  DeformationEquations,
  Decompose,
  Periods,
  FirstIntegral,
  ClassifyDegreeOne,
  Rescale,
  RadialTest,
};

inline constexpr const char* kReportSchema = "foliage-report/1";

std::optional<Command> parse_command(const std::string& name);
const char* command_name(Command c);

struct JobSpec {
  Command command = Command::CheckIntegrable;
  std::optional<std::string> input;   // stdin when empty
  std::optional<std::string> output;  // stdout when empty
  std::optional<double> tol;
  std::optional<std::size_t> max_nodes;
  std::optional<std::size_t> order;
  std::uint64_t seed = 0;
};

/// Exit codes: property holds, property fails (with witness), input or
/// hypothesis error.
enum ExitCode : int { kHolds = 0, kFails = 1, kError = 2 };

struct JobResult {
  int exit_code = kError;
  io::Json report;
  std::string summary;
};

/// Runs one job on already-loaded input text. Never throws.
JobResult run(const JobSpec& job, const std::string& input_text);

/// Reads the input (file or stdin), runs the job, writes the report (file or
/// stdout) and prints the summary. Returns the exit code.
int run_and_write(const JobSpec& job);

}  // namespace foliage::cli
