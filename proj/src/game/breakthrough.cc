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

#include "descent/game/breakthrough.h"

#include "descent/game/game_lengths.h"

namespace descent {

Breakthrough::Breakthrough(int size)
    : Game({GameKind::kBreakthrough, size, false}, size, size) {
  std::vector<int> identity(static_cast<size_t>(size * size));
  std::vector<int> mirror(identity.size());
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      identity[CellIndex(r, c)] = CellIndex(r, c);
      mirror[CellIndex(r, c)] = CellIndex(r, size - 1 - c);
    }
  }
  SetSymmetries({identity, mirror});
}

double Breakthrough::MaxActions() const {
  return ApproximateGameLength(GameKind::kBreakthrough, rows());
}

void Breakthrough::SetupInitial(GameState& state) const {
  const int n = rows();
  for (int c = 0; c < n; ++c) {
    state.cells[CellIndex(0, c)] = kFirstStone;
    state.cells[CellIndex(1, c)] = kFirstStone;
    state.cells[CellIndex(n - 2, c)] = kSecondStone;
    state.cells[CellIndex(n - 1, c)] = kSecondStone;
  }
}

int Breakthrough::Target(Action action) const {
  const int from = action / 6;
  const int step = action % 6;
  const int r = RowOf(from) + (step < 3 ? 1 : -1);
  const int c = ColOf(from) + step % 3 - 1;
  return OnBoard(r, c) ? CellIndex(r, c) : -1;
}

void Breakthrough::MovesFrom(const GameState& state, int from,
                             std::vector<Action>* out, bool* any) const {
  const int8_t own = state.cells[from];
  const int base = own == kFirstStone ? 0 : 3;
  for (int k = 0; k < 3; ++k) {
    const Action a = from * 6 + base + k;
    const int to = Target(a);
    if (to < 0) continue;
    const int8_t dest = state.cells[to];
    if (k == 1 ? dest == kEmpty : dest != own) {
      if (out != nullptr) out->push_back(a);
      if (any != nullptr) {
        *any = true;
        return;
      }
    }
  }
}

void Breakthrough::GenerateActions(const GameState& state,
                                   std::vector<Action>& out) const {
  const int8_t own = StoneOf(state.to_move);
  for (int from = 0; from < num_cells(); ++from) {
    if (state.cells[from] == own) MovesFrom(state, from, &out, nullptr);
  }
}

bool Breakthrough::HasMove(const GameState& state, Player player) const {
  const int8_t own = StoneOf(player);
  bool any = false;
  for (int from = 0; from < num_cells() && !any; ++from) {
    if (state.cells[from] == own) MovesFrom(state, from, nullptr, &any);
  }
  return any;
}

void Breakthrough::PlayAction(GameState& state, Action action) const {
  const int8_t own = StoneOf(state.to_move);
  const int from = action / 6;
  const int to = Target(action);
  if (state.cells[to] != kEmpty) state.key ^= CellKey(to, state.cells[to]);
  state.cells[to] = own;
  state.key ^= CellKey(to, own);
  state.cells[from] = kEmpty;
  state.key ^= CellKey(from, own);
}

int8_t Breakthrough::ComputeOutcome(const GameState& state) const {
  const int n = rows();
  int first = 0, second = 0;
  for (int i = 0; i < num_cells(); ++i) {
    if (state.cells[i] == kFirstStone) {
      ++first;
      if (RowOf(i) == n - 1) return 1;
    } else if (state.cells[i] == kSecondStone) {
      ++second;
      if (RowOf(i) == 0) return -1;
    }
  }
  if (first == 0) return -1;
  if (second == 0) return 1;
  if (!HasMove(state, state.to_move)) {
    return static_cast<int8_t>(-Sign(state.to_move));
  }
  return kOngoing;
}

std::string Breakthrough::ActionToString(Action action) const {
  const int to = Target(action);
  if (to < 0) return Game::ActionToString(action);
  return CellName(action / 6) + "-" + CellName(to);
}

}  // namespace descent
