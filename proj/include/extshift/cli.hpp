#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "extshift/operators.hpp"
#include "extshift/report.hpp"
#include "extshift/tolerances.hpp"

namespace extshift::cli {

enum class Command { Spectrum, Eigenvectors, Verify, Gram, ShiftMatrix, Random };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitMismatch = 2,
  kExitRefused = 3,
};

struct RunConfig {
  Command command = Command::Spectrum;
  std::optional<std::string> input_path;
  std::optional<std::string> zeros_json;
  std::optional<Complex> lambda;  // required by eigenvectors; sample point for whole-plane spectra
  std::optional<std::uint64_t> seed;
  int max_degree = 8;
  BasisKind basis = BasisKind::Dual;
  OperatorKind op = OperatorKind::Forward;
  Tolerances tolerances;
  std::optional<std::string> output_path;
};

struct RunResult {
  int exit_code = kExitOk;
  Json report;
};

// "RE,IM" or "RE".
Complex parse_lambda(std::string_view text);

// Sample points used when the extended spectrum is the whole plane.
std::vector<Complex> default_samples();

// Runs one command. Never throws for input or numerical problems; those become
// an error record and the matching exit code.
RunResult run(const RunConfig& config);

// run() plus serialization to config.output_path, or to `out` when unset.
int execute(const RunConfig& config, std::ostream& out);

}  // namespace extshift::cli
