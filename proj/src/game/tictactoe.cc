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

#include "descent/game/tictactoe.h"

namespace descent {

TicTacToe::TicTacToe() : Game({GameKind::kTicTacToe, 3, false}, 3, 3) {
  SetSymmetries(SquareGroup(3));
}

void TicTacToe::GenerateActions(const GameState& state,
                                std::vector<Action>& out) const {
  for (int i = 0; i < 9; ++i) {
    if (state.cells[i] == kEmpty) out.push_back(i);
  }
}

void TicTacToe::PlayAction(GameState& state, Action action) const {
  const int8_t stone = StoneOf(state.to_move);
  state.cells[action] = stone;
  state.key ^= CellKey(action, stone);
}

int8_t TicTacToe::ComputeOutcome(const GameState& state) const {
  static constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                       {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                                       {0, 4, 8}, {2, 4, 6}};
  for (const auto& line : kLines) {
    const int8_t s = state.cells[line[0]];
    if (s != kEmpty && s == state.cells[line[1]] && s == state.cells[line[2]]) {
      return s == kFirstStone ? 1 : -1;
    }
  }
  for (int8_t c : state.cells) {
    if (c == kEmpty) return kOngoing;
  }
  return 0;
}

}  // namespace descent
