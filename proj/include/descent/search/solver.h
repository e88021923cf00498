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

#ifndef DESCENT_SEARCH_SOLVER_H_
#define DESCENT_SEARCH_SOLVER_H_

#include <unordered_map>
#include <vector>

#include "descent/game/game.h"

namespace descent {

// Exhaustive memoized minimax over the game gain. Only meant for tiny
// games (TicTacToe, Hex 3).
class Solver {
 public:
  explicit Solver(const Game& game) : game_(game) {}

  // Game-theoretic value in {-1, 0, +1}, first player's view.
  int Value(const GameState& state);
  // Actions achieving the value, in canonical order.
  std::vector<Action> OptimalActions(const GameState& state);
  size_t solved_states() const { return memo_.size(); }

 private:
  const Game& game_;
  std::unordered_map<StateKey, int8_t> memo_;
};

}  // namespace descent

#endif  // DESCENT_SEARCH_SOLVER_H_
