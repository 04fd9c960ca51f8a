// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace drs::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kIoFailure = 2 };

struct RunOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  std::optional<long> steps;
  std::optional<bool> orientation_control;
  std::optional<std::string> sinr_form;
  std::optional<std::filesystem::path> out;
  bool paired = false;
};

struct SweepOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  std::string seeds = "20";
  std::optional<long> steps;
  std::optional<std::string> sinr_form;
  std::optional<std::filesystem::path> out;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct PlotOptions {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path out = "out";
};

int cmd_run(const RunOptions& options);
int cmd_sweep(const SweepOptions& options);
int cmd_plot(const PlotOptions& options);

/// "1,4,9" is a list, "3-7" an inclusive range, a bare "n" means n seeds
/// starting at `base`. Throws std::invalid_argument on malformed text.
std::vector<std::uint64_t> parse_seed_list(const std::string& text, std::uint64_t base);

/// Parses argv and dispatches to the subcommand. Returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace drs::cli
