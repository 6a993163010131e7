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

#ifndef FLATMATCH_REPORT_HPP_
#define FLATMATCH_REPORT_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace flatmatch {

// Outcome of one named check. `detail` holds a counterexample on failure and
// a short summary otherwise.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  void add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  // Failing checks, one per line, for exception messages.
  std::string failures() const {
    std::string out;
    for (const auto& c : checks) {
      if (!c.passed) out += c.name + ": " + c.detail + "\n";
    }
    return out;
  }
};

}  // namespace flatmatch

#endif  // FLATMATCH_REPORT_HPP_
