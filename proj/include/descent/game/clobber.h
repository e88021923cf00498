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

#ifndef DESCENT_GAME_CLOBBER_H_
#define DESCENT_GAME_CLOBBER_H_

#include "descent/game/game.h"

namespace descent {

// Clobber on n x n, starting from a full checkerboard (first player on
// squares with even row+column). A move takes one of the mover's pieces
// onto an orthogonally adjacent enemy piece, removing it. The player unable
// to move loses. Isolated pieces simply stay on the board.
//
// Action = origin cell * 4 + direction (0 row-1, 1 col-1, 2 col+1, 3 row+1).
class Clobber final : public Game {
 public:
  explicit Clobber(int size);

  bool HasPieces() const override { return true; }
  double MaxActions() const override;

  std::string ActionToString(Action action) const override;
  int Target(Action action) const;

 protected:
  void SetupInitial(GameState& state) const override;
  void GenerateActions(const GameState& state,
                       std::vector<Action>& out) const override;
  void PlayAction(GameState& state, Action action) const override;
  int8_t ComputeOutcome(const GameState& state) const override;
};

}  // namespace descent

#endif  // DESCENT_GAME_CLOBBER_H_
