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

#ifndef DESCENT_GAME_TICTACTOE_H_
#define DESCENT_GAME_TICTACTOE_H_

#include "descent/game/game.h"

namespace descent {

// 3x3 noughts and crosses. Small enough to solve exhaustively, which makes
// it the reference game for search and learning oracles.
class TicTacToe final : public Game {
 public:
  TicTacToe();

  bool HasPieces() const override { return true; }
  double MaxActions() const override { return 9.0; }
  bool MaxActionsExact() const override { return true; }

 protected:
  void SetupInitial(GameState&) const override {}
  void GenerateActions(const GameState& state,
                       std::vector<Action>& out) const override;
  void PlayAction(GameState& state, Action action) const override;
  int8_t ComputeOutcome(const GameState& state) const override;
};

}  // namespace descent

#endif  // DESCENT_GAME_TICTACTOE_H_
