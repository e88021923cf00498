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

#include "descent/game/clobber.h"

#include "descent/game/game_lengths.h"

namespace descent {
namespace {

constexpr int kDr[4] = {-1, 0, 0, 1};
constexpr int kDc[4] = {0, -1, 1, 0};

}  // namespace

Clobber::Clobber(int size) : Game({GameKind::kClobber, size, false}, size, size) {
  SetSymmetries(SquareGroup(size));
}

double Clobber::MaxActions() const {
  return ApproximateGameLength(GameKind::kClobber, rows());
}

void Clobber::SetupInitial(GameState& state) const {
  for (int i = 0; i < num_cells(); ++i) {
    state.cells[i] = (RowOf(i) + ColOf(i)) % 2 == 0 ? kFirstStone : kSecondStone;
  }
}

int Clobber::Target(Action action) const {
  const int from = action / 4;
  const int r = RowOf(from) + kDr[action % 4];
  const int c = ColOf(from) + kDc[action % 4];
  return OnBoard(r, c) ? CellIndex(r, c) : -1;
}

void Clobber::GenerateActions(const GameState& state,
                              std::vector<Action>& out) const {
  const int8_t own = StoneOf(state.to_move);
  const int8_t other = StoneOf(Opponent(state.to_move));
  for (int from = 0; from < num_cells(); ++from) {
    if (state.cells[from] != own) continue;
    for (int d = 0; d < 4; ++d) {
      const int to = Target(from * 4 + d);
      if (to >= 0 && state.cells[to] == other) out.push_back(from * 4 + d);
    }
  }
}

void Clobber::PlayAction(GameState& state, Action action) const {
  const int8_t own = StoneOf(state.to_move);
  const int8_t other = StoneOf(Opponent(state.to_move));
  const int from = action / 4;
  const int to = Target(action);
  state.cells[to] = own;
  state.key ^= CellKey(to, other) ^ CellKey(to, own);
  state.cells[from] = kEmpty;
  state.key ^= CellKey(from, own);
}

int8_t Clobber::ComputeOutcome(const GameState& state) const {
  const int8_t own = StoneOf(state.to_move);
  const int8_t other = StoneOf(Opponent(state.to_move));
  for (int from = 0; from < num_cells(); ++from) {
    if (state.cells[from] != own) continue;
    for (int d = 0; d < 4; ++d) {
      const int to = Target(from * 4 + d);
      if (to >= 0 && state.cells[to] == other) return kOngoing;
    }
  }
  return static_cast<int8_t>(-Sign(state.to_move));
}

std::string Clobber::ActionToString(Action action) const {
  const int to = Target(action);
  if (to < 0) return Game::ActionToString(action);
  return CellName(action / 4) + "-" + CellName(to);
}

}  // namespace descent
