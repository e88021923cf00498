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

#ifndef DESCENT_LEARNING_REPLAY_H_
#define DESCENT_LEARNING_REPLAY_H_

#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "descent/eval/evaluator.h"
#include "descent/learning/policy.h"

namespace descent {

enum class ReplayUnit { kPairs, kGames };

ReplayUnit ParseReplayUnit(std::string_view name);
std::string ReplayUnitName(ReplayUnit unit);

// Bounded FIFO memory M of training pairs. Capacity mu counts pairs or
// whole games; eviction is strictly oldest first.
class ReplayBuffer {
 public:
  ReplayBuffer(size_t capacity, double sigma, ReplayUnit unit = ReplayUnit::kPairs);

  // Appends one game's pairs and evicts beyond capacity.
  void Push(std::vector<LabeledState> pairs);

  // Pairs mode: all of M when |M| <= sigma*mu, else floor(sigma*mu) pairs
  // drawn without replacement. Games mode: all of M when the game count is
  // <= sigma*mu, else floor(sigma*mu / games * |M|) pairs.
  std::vector<LabeledState> Sample(Rng& rng) const;

  // Push followed by Sample.
  std::vector<LabeledState> PushSample(std::vector<LabeledState> pairs, Rng& rng) {
    Push(std::move(pairs));
    return Sample(rng);
  }

  size_t pairs() const { return pairs_.size(); }
  size_t games() const { return game_sizes_.size(); }
  const std::deque<LabeledState>& contents() const { return pairs_; }

 private:
  size_t capacity_;
  double sigma_;
  ReplayUnit unit_;
  std::deque<LabeledState> pairs_;
  std::deque<size_t> game_sizes_;
};

}  // namespace descent

#endif  // DESCENT_LEARNING_REPLAY_H_
