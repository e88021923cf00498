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

#ifndef DESCENT_LEARNING_EPISODE_H_
#define DESCENT_LEARNING_EPISODE_H_

#include <vector>

#include "descent/eval/evaluator.h"
#include "descent/eval/terminal_eval.h"
#include "descent/game/game.h"
#include "descent/learning/config.h"
#include "descent/learning/policy.h"
#include "descent/search/search.h"

namespace descent {

struct Episode {
  std::vector<GameState> trajectory;  // G, terminal included when finished
  std::vector<Action> actions;
  std::vector<LabeledState> data;     // D
  MobilityTally tally;
  bool aborted = false;               // ply cap reached
  int result = 0;                     // gain of the final state
  size_t table_size = 0;
};

struct EpisodeSetup {
  const Game& game;
  Searcher& searcher;
  const TerminalEval& f_t;
  DataMode mode = DataMode::kTree;
  PolicyConfig policy;
  int ply_cap = 1000;
};

// One self-play game: search from each position, then let the policy pick
// among the root's children. eps is the annealing ratio t / t_max.
Episode RunEpisode(const EpisodeSetup& setup, double eps, Rng& rng);

// Adds the symmetric images of every pair with the same value; one pair
// per state key, the last value winning.
std::vector<LabeledState> Augment(const Game& game, const std::vector<LabeledState>& data);

}  // namespace descent

#endif  // DESCENT_LEARNING_EPISODE_H_
