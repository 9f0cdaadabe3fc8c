// Copyright 2026 The streamshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STREAMSHARE_CLI_HPP_
#define STREAMSHARE_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "streamshare/indices.hpp"
#include "streamshare/registry.hpp"

namespace streamshare::cli {

enum class Command { kCompute, kAxioms, kShapleyAudit };
enum class Format { kJson, kCsv, kTable };

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,     // I/O, parse, bad arguments
  kExitDomain = 3,    // index undefined on the input (zero sum)
  kExitMismatch = 4,  // an audit disagrees with what it expects
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char* kSeedEnvVar = "STREAMSHARE_SEED";

struct RunConfig {
  Command command = Command::kCompute;
  std::filesystem::path input;
  std::string index = "pro-rata";
  IndexParams params;
  // axioms: subset of the registry; empty means the matrix indices.
  std::vector<std::string> indices;
  Format format = Format::kJson;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = 500;
  int precision = 2;
  std::size_t threads = 0;
  // shapley-audit
  std::size_t profiles = 200;
  std::size_t games = 100;
  // "decomposition:game"; empty means pro-rata:pro-rata-game and
  // shapley:shapley-game.
  std::vector<std::string> pairs;
};

// Default seed: $STREAMSHARE_SEED when set, kDefaultSeed otherwise.
// Throws kInvalidParameter on a malformed value.
std::uint64_t default_seed();

// Throws streamshare::Error on an invalid configuration.
void validate(const RunConfig& config);

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_axioms(const RunConfig& config, std::ostream& out, std::ostream& err);
// Runs the audit over caller-supplied indices; expectations are looked up
// by index name.
int cmd_axioms(const RunConfig& config, std::span<const Index> indices, std::ostream& out,
               std::ostream& err);
int cmd_shapley_audit(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses arguments (argv[0] is the program name) and runs the command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace streamshare::cli

#endif  // STREAMSHARE_CLI_HPP_
