// Copyright 2026 The Authors.
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

#ifndef FLATMATCH_TOOLS_COMMANDS_HPP_
#define FLATMATCH_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "flatmatch/matching.hpp"
#include "flatmatch/matroid.hpp"

namespace flatmatch::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kInternalError = 3,
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string out;
  Strategy strategy = Strategy::kAuto;
  std::uint64_t seed = 1;
  std::size_t flat_cap = kDefaultFlatCap;
  int exhaustive_cap = 200;
};

int cmd_build(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_match(const RunConfig& config, std::ostream& out);
int cmd_obstruct(const RunConfig& config, std::ostream& out);
int cmd_export_dot(const RunConfig& config, std::ostream& out);
int cmd_gen_corpus(const RunConfig& config, std::ostream& out);

// Parses `args` (without the program name), dispatches, and maps exceptions
// to exit codes. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatmatch::cli

#endif  // FLATMATCH_TOOLS_COMMANDS_HPP_
