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

#ifndef DESCENT_LEARNING_POLICY_H_
#define DESCENT_LEARNING_POLICY_H_

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descent/game/game.h"
#include "descent/search/table.h"

namespace descent {

enum class PolicyKind { kEpsilonGreedy, kSoftmax, kOrdinal };

std::string PolicyName(PolicyKind kind);
PolicyKind ParsePolicy(std::string_view name);

using Rng = std::mt19937_64;

struct PolicyConfig {
  PolicyKind kind = PolicyKind::kEpsilonGreedy;
  double temperature = 1.0;  // softmax only
  bool completed = false;    // wrap with the completed selection rule
};

// Candidate order from best to worst for the mover (stable: ties keep
// canonical order). values are first-player values.
std::vector<size_t> RankBestFirst(std::span<const double> values, Player mover);

// Each sampler returns an index into values. eps is the annealing ratio
// t / t_max in [0, 1].
size_t SelectEpsilonGreedy(std::span<const double> values, Player mover, double eps, Rng& rng);
size_t SelectSoftmax(std::span<const double> values, Player mover, double temperature, Rng& rng);
size_t SelectOrdinal(std::span<const double> values, Player mover, double eps, Rng& rng);

// Applies the configured policy to the root's children in the table. With
// the completed wrapper, a child resolved as a win for the mover is played
// at once (best valued first), and resolved losses are dropped whenever
// some other child remains. Returns the chosen child index.
size_t SelectChild(const PolicyConfig& policy, const SearchTable& table, const NodeRecord& node,
                   double eps, Rng& rng);

}  // namespace descent

#endif  // DESCENT_LEARNING_POLICY_H_
