// Copyright 2026 The Descent Authors.
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

#ifndef DESCENT_TOOLS_VERIFY_H_
#define DESCENT_TOOLS_VERIFY_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace descent::tools {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 2;
  int draws = 10000;   // distributions
  int games = 1000;    // completion, per opponent
};

// Each suite prints one line per check and returns the checks.
std::vector<Check> VerifyOracle(const VerifyOptions& opt, std::ostream& out);
std::vector<Check> VerifyGradcheck(const VerifyOptions& opt, std::ostream& out);
std::vector<Check> VerifyDistributions(const VerifyOptions& opt, std::ostream& out);
std::vector<Check> VerifyCompletion(const VerifyOptions& opt, std::ostream& out);

}  // namespace descent::tools

#endif  // DESCENT_TOOLS_VERIFY_H_
