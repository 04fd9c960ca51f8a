// SPDX-License-Identifier: Apache-2.0
//
// Flat key/value experiment configuration.
//
//   # comment
//   [scenario]
//   arrival_rate = 0.2
//   interferer = "rsu"
//   radio.sinr_form = "standard"   # dotted keys work inside or outside sections
//
// Every key is typed and unknown keys are rejected. See config_keys() for the
// full list.

#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "drs/engine.hpp"

namespace drs::cli {

struct RunConfig {
  SimulationConfig sim;
  std::filesystem::path output_dir = "out";
};

/// Invalid configuration; `key()` names the offending entry.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

private:
  std::string key_;
};

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

/// Re-runs all model invariants, rethrowing failures as ConfigError.
void validate(const RunConfig& config);

std::vector<std::string> config_keys();

/// Fully-resolved configuration as dotted key -> printable value.
std::map<std::string, std::string> describe(const RunConfig& config);

const char* to_string(SinrForm form);
const char* to_string(InterfererKind kind);

}  // namespace drs::cli
