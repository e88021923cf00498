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

#include "descent/game/othello.h"

#include "descent/game/game_lengths.h"

namespace descent {
namespace {

constexpr int kDr[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kDc[8] = {-1, 0, 1, -1, 1, -1, 0, 1};

}  // namespace

Othello::Othello(int size) : Game({GameKind::kOthello, size, false}, size, size) {
  SetSymmetries(SquareGroup(size));
}

double Othello::MaxActions() const {
  return ApproximateGameLength(GameKind::kOthello, rows());
}

void Othello::SetupInitial(GameState& state) const {
  const int m = rows() / 2;
  state.cells[CellIndex(m - 1, m - 1)] = kSecondStone;
  state.cells[CellIndex(m, m)] = kSecondStone;
  state.cells[CellIndex(m - 1, m)] = kFirstStone;
  state.cells[CellIndex(m, m - 1)] = kFirstStone;
}

bool Othello::Flanks(const GameState& state, int cell, int8_t stone) const {
  const int8_t other = stone == kFirstStone ? kSecondStone : kFirstStone;
  const int r = RowOf(cell), c = ColOf(cell);
  for (int d = 0; d < 8; ++d) {
    int nr = r + kDr[d], nc = c + kDc[d];
    int run = 0;
    while (OnBoard(nr, nc) && state.cells[CellIndex(nr, nc)] == other) {
      nr += kDr[d];
      nc += kDc[d];
      ++run;
    }
    if (run > 0 && OnBoard(nr, nc) && state.cells[CellIndex(nr, nc)] == stone) {
      return true;
    }
  }
  return false;
}

bool Othello::CanPlace(const GameState& state, Player player) const {
  const int8_t stone = StoneOf(player);
  for (int i = 0; i < num_cells(); ++i) {
    if (state.cells[i] == kEmpty && Flanks(state, i, stone)) return true;
  }
  return false;
}

void Othello::GenerateActions(const GameState& state,
                              std::vector<Action>& out) const {
  const int8_t stone = StoneOf(state.to_move);
  for (int i = 0; i < num_cells(); ++i) {
    if (state.cells[i] == kEmpty && Flanks(state, i, stone)) out.push_back(i);
  }
  if (out.empty()) out.push_back(pass_action());
}

void Othello::PlayAction(GameState& state, Action action) const {
  if (action == pass_action()) return;
  const int8_t stone = StoneOf(state.to_move);
  const int8_t other = stone == kFirstStone ? kSecondStone : kFirstStone;
  const int r = RowOf(action), c = ColOf(action);
  state.cells[action] = stone;
  state.key ^= CellKey(action, stone);
  for (int d = 0; d < 8; ++d) {
    int nr = r + kDr[d], nc = c + kDc[d];
    int run = 0;
    while (OnBoard(nr, nc) && state.cells[CellIndex(nr, nc)] == other) {
      nr += kDr[d];
      nc += kDc[d];
      ++run;
    }
    if (run == 0 || !OnBoard(nr, nc) || state.cells[CellIndex(nr, nc)] != stone) {
      continue;
    }
    for (int k = 1; k <= run; ++k) {
      const int cell = CellIndex(r + k * kDr[d], c + k * kDc[d]);
      state.cells[cell] = stone;
      state.key ^= CellKey(cell, other) ^ CellKey(cell, stone);
    }
  }
}

int8_t Othello::ComputeOutcome(const GameState& state) const {
  if (CanPlace(state, state.to_move) || CanPlace(state, Opponent(state.to_move))) {
    return kOngoing;
  }
  return OutcomeFromDifference(PieceCount(state, Player::kFirst) -
                               PieceCount(state, Player::kSecond));
}

std::string Othello::ActionToString(Action action) const {
  if (action == pass_action()) return "pass";
  return Game::ActionToString(action);
}

}  // namespace descent
