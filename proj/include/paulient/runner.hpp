// Copyright 2026 The paulient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace paulient::cli {

enum class Command {
  kPeExact,
  kPeSample,
  kPeTypical,
  kPeBounds,
  kHaarMc,
  kThm1Check,
  kThm1Factorize,
  kMpuPe,
  kSpinchainRun,
  kSelftest,
};

std::string command_name(Command c);
std::optional<Command> parse_command(const std::string& name);
std::vector<Command> all_commands();

enum class ParamType { kInt, kReal, kString, kBool };

struct ParamSpec {
  std::string name;
  ParamType type;
  nlohmann::json default_value;  // null means "no default"
  std::string help;
};

/// Parameters accepted by a command, including the shared seed/out/workers.
const std::vector<ParamSpec>& command_schema(Command c);

/// A validated run: every schema key is present (defaults filled in) and no
/// other key exists. `explicit_keys` lists the keys the user actually set.
struct RunConfig {
  Command command = Command::kSelftest;
  nlohmann::json params = nlohmann::json::object();
  std::set<std::string> explicit_keys;

  std::uint64_t seed() const;
};

/// Builds a RunConfig from a config document (which must name its command)
/// overlaid with flag values. Flags win on conflict. Throws ConfigError.
RunConfig make_config(std::optional<Command> command, const nlohmann::json& file_config,
                      const nlohmann::json& flag_values);

/// Hex SHA-256 of the canonical JSON of the run, excluding `workers` and `out`.
std::string config_digest(const RunConfig& config);

/// Executes the run. Exit codes: 0 success, 1 computation error, 2 config error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point used by tools/paulient.
int main_entry(int argc, char** argv);

}  // namespace paulient::cli
