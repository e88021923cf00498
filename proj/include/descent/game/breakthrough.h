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

#ifndef DESCENT_GAME_BREAKTHROUGH_H_
#define DESCENT_GAME_BREAKTHROUGH_H_

#include "descent/game/game.h"

namespace descent {

// Breakthrough on n x n. The first player starts on rows 0-1 and moves
// toward row n-1; the second player starts on rows n-2..n-1 and moves toward
// row 0. A piece steps one square forward, straight onto an empty square or
// diagonally onto an empty or enemy square (capturing). Reaching the far row
// or capturing every enemy piece wins; a player left without a move loses.
//
// Action = origin cell * 6 + step, steps 0-2 moving up a row (column -1, 0,
// +1) and 3-5 moving down a row.
class Breakthrough final : public Game {
 public:
  explicit Breakthrough(int size);

  bool HasPieces() const override { return true; }
  double MaxActions() const override;

  std::string ActionToString(Action action) const override;
  // Target cell of an action, or -1 when it leaves the board.
  int Target(Action action) const;

 protected:
  void SetupInitial(GameState& state) const override;
  void GenerateActions(const GameState& state,
                       std::vector<Action>& out) const override;
  void PlayAction(GameState& state, Action action) const override;
  int8_t ComputeOutcome(const GameState& state) const override;

 private:
  bool HasMove(const GameState& state, Player player) const;
  void MovesFrom(const GameState& state, int from, std::vector<Action>* out,
                 bool* any) const;
};

}  // namespace descent

#endif  // DESCENT_GAME_BREAKTHROUGH_H_
