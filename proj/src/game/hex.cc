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

#include "descent/game/hex.h"

#include <algorithm>
#include <numeric>

namespace descent {
namespace {

constexpr int kNeighborDr[6] = {-1, -1, 0, 0, 1, 1};
constexpr int kNeighborDc[6] = {0, 1, -1, 1, -1, 0};

}  // namespace

Hex::Hex(int size, bool swap)
    : Game({GameKind::kHex, size, swap}, size, size), size_(size), swap_(swap) {
  const int cells = size * size;
  std::vector<int> identity(static_cast<size_t>(cells));
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<int> rotate(static_cast<size_t>(cells));
  for (int i = 0; i < cells; ++i) rotate[i] = cells - 1 - i;
  SetSymmetries({identity, rotate});
}

void Hex::SetupInitial(GameState&) const {}

bool Hex::ExtraKeyActive(const GameState& state) const {
  return swap_ && state.ply == 1 && state.to_move == Player::kSecond;
}

void Hex::GenerateActions(const GameState& state,
                          std::vector<Action>& out) const {
  for (int i = 0; i < num_cells(); ++i) {
    if (state.cells[i] == kEmpty) out.push_back(i);
  }
  if (ExtraKeyActive(state)) out.push_back(swap_action());
}

int Hex::Root(std::vector<int16_t>& links, int node) {
  while (links[node] != node) {
    links[node] = links[links[node]];
    node = links[node];
  }
  return node;
}

void Hex::Union(std::vector<int16_t>& links, int a, int b) {
  a = Root(links, a);
  b = Root(links, b);
  if (a == b) return;
  if (a > b) std::swap(a, b);
  links[b] = static_cast<int16_t>(a);
}

int Hex::FindGroup(const GameState& state, int node) const {
  while (state.links[node] != node) node = state.links[node];
  return node;
}

void Hex::Connect(GameState& state, int cell) const {
  const int8_t stone = state.cells[cell];
  const int r = RowOf(cell), c = ColOf(cell);
  for (int d = 0; d < 6; ++d) {
    const int nr = r + kNeighborDr[d], nc = c + kNeighborDc[d];
    if (OnBoard(nr, nc) && state.cells[CellIndex(nr, nc)] == stone) {
      Union(state.links, cell, CellIndex(nr, nc));
    }
  }
  if (stone == kFirstStone) {
    if (r == 0) Union(state.links, cell, top());
    if (r == size_ - 1) Union(state.links, cell, bottom());
  } else {
    if (c == 0) Union(state.links, cell, left());
    if (c == size_ - 1) Union(state.links, cell, right());
  }
}

void Hex::RebuildLinks(GameState& state) const {
  state.links.resize(static_cast<size_t>(num_cells() + 4));
  std::iota(state.links.begin(), state.links.end(), int16_t{0});
  for (int i = 0; i < num_cells(); ++i) {
    if (state.cells[i] != kEmpty) Connect(state, i);
  }
}

void Hex::PlayAction(GameState& state, Action action) const {
  if (action == swap_action()) {
    const auto it = std::find(state.cells.begin(), state.cells.end(), kFirstStone);
    const int cell = static_cast<int>(it - state.cells.begin());
    const int mirrored = CellIndex(ColOf(cell), RowOf(cell));
    state.cells[cell] = kEmpty;
    state.key ^= CellKey(cell, kFirstStone);
    state.cells[mirrored] = kSecondStone;
    state.key ^= CellKey(mirrored, kSecondStone);
    RebuildLinks(state);
    return;
  }
  const int8_t stone = StoneOf(state.to_move);
  state.cells[action] = stone;
  state.key ^= CellKey(action, stone);
  Connect(state, action);
}

int8_t Hex::ComputeOutcome(const GameState& state) const {
  if (FindGroup(state, top()) == FindGroup(state, bottom())) return 1;
  if (FindGroup(state, left()) == FindGroup(state, right())) return -1;
  return kOngoing;
}

PlaneShape Hex::EncodingShape() const { return {3, size_ + 2, size_ + 2}; }

void Hex::EncodePlanes(const GameState& state, std::span<float> out) const {
  const int w = size_ + 2;
  const int area = w * w;
  std::fill(out.begin(), out.end(), 0.0f);
  for (int k = 1; k <= size_; ++k) {
    out[0 * w + k] = 1.0f;
    out[(w - 1) * w + k] = 1.0f;
    out[area + k * w + 0] = 1.0f;
    out[area + k * w + (w - 1)] = 1.0f;
  }
  for (int i = 0; i < num_cells(); ++i) {
    const int pos = (RowOf(i) + 1) * w + (ColOf(i) + 1);
    if (state.cells[i] == kFirstStone) out[pos] = 1.0f;
    if (state.cells[i] == kSecondStone) out[area + pos] = 1.0f;
  }
  if (state.to_move == Player::kFirst) {
    std::fill(out.begin() + 2 * area, out.begin() + 3 * area, 1.0f);
  }
}

std::string Hex::ActionToString(Action action) const {
  if (action == swap_action()) return "swap";
  return Game::ActionToString(action);
}

std::string Hex::ToAscii(const GameState& state) const {
  std::string out = "  ";
  for (int c = 0; c < size_; ++c) {
    out += static_cast<char>('a' + c);
    out += ' ';
  }
  out += '\n';
  for (int r = 0; r < size_; ++r) {
    std::string label = std::to_string(r + 1);
    out += std::string(static_cast<size_t>(r), ' ');
    out += label.size() < 2 ? " " + label : label;
    for (int c = 0; c < size_; ++c) {
      out += StoneChar(state.cells[CellIndex(r, c)]);
      out += ' ';
    }
    out += '\n';
  }
  return out;
}

}  // namespace descent
