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

#ifndef DESCENT_GAME_OTHELLO_H_
#define DESCENT_GAME_OTHELLO_H_

#include "descent/game/game.h"

namespace descent {

// Othello on an even n x n board. The first player is black and holds the
// two anti-diagonal centre squares. A player with no encircling placement
// must play the explicit pass action (listed only in that case); the game
// ends when neither player can place, which is the standard "two passes"
// ending with the forced passes elided.
class Othello final : public Game {
 public:
  explicit Othello(int size);

  Action pass_action() const { return num_cells(); }

  bool HasScore() const override { return true; }
  bool HasPieces() const override { return true; }
  double MaxActions() const override;

  std::string ActionToString(Action action) const override;

  bool CanPlace(const GameState& state, Player player) const;

 protected:
  void SetupInitial(GameState& state) const override;
  void GenerateActions(const GameState& state,
                       std::vector<Action>& out) const override;
  void PlayAction(GameState& state, Action action) const override;
  int8_t ComputeOutcome(const GameState& state) const override;

 private:
  bool Flanks(const GameState& state, int cell, int8_t stone) const;
};

}  // namespace descent

#endif  // DESCENT_GAME_OTHELLO_H_
