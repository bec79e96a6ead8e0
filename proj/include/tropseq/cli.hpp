#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace tropseq::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kInputError = 2 };

struct RunConfig {
  std::string command;  // classify | check | witness | dim | scan | lemmas
  std::string system_path;
  std::string format = "json";  // json | csv
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::uint64_t seed = 0;
  std::optional<std::string> sequence_path;
  std::optional<std::string> slacks_path;
  std::optional<std::string> prefix_path;
  int jobs = 1;
};

/// Largest N accepted by the enumerating commands (dim, scan, lemmas).
inline constexpr int kMaxEnumerationLength = 20;

/// Executes one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropseq::cli
