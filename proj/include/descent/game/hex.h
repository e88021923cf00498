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

#ifndef DESCENT_GAME_HEX_H_
#define DESCENT_GAME_HEX_H_

#include "descent/game/game.h"

namespace descent {

// Hex on an n x n rhombus. The first player connects the top row (row 0) to
// the bottom row (row n-1); the second player connects the left and right
// columns. Connectivity is tracked with a union-find over stone groups plus
// four virtual side nodes, carried inside the state.
//
// With the swap rule the second player may answer the first stone with the
// swap action. Swapping is realised as a reflection of the board across the
// main diagonal combined with a colour exchange, so the first player keeps
// the top-bottom goal and values stay in a single perspective.
class Hex final : public Game {
 public:
  Hex(int size, bool swap);

  int size() const { return size_; }
  bool swap_enabled() const { return swap_; }
  Action swap_action() const { return size_ * size_; }

  double MaxActions() const override {
    return size_ * size_ + (swap_ ? 1 : 0);
  }
  bool MaxActionsExact() const override { return true; }
  bool HasPieces() const override { return true; }

  // (n+2) x (n+2) planes: 0 first-player stones, 1 second-player stones,
  // 2 ones when the first player is to move. The border ring carries each
  // side's stones: rows 0 and n+1 (columns 1..n) in plane 0, columns 0 and
  // n+1 (rows 1..n) in plane 1. Corners stay empty.
  PlaneShape EncodingShape() const override;
  using Game::EncodePlanes;
  void EncodePlanes(const GameState& state, std::span<float> out) const override;

  std::string ActionToString(Action action) const override;
  std::string ToAscii(const GameState& state) const override;

  // Virtual side nodes in GameState::links.
  int top() const { return size_ * size_; }
  int bottom() const { return size_ * size_ + 1; }
  int left() const { return size_ * size_ + 2; }
  int right() const { return size_ * size_ + 3; }
  int FindGroup(const GameState& state, int node) const;

 protected:
  void SetupInitial(GameState& state) const override;
  void GenerateActions(const GameState& state,
                       std::vector<Action>& out) const override;
  void PlayAction(GameState& state, Action action) const override;
  int8_t ComputeOutcome(const GameState& state) const override;
  void RebuildLinks(GameState& state) const override;
  bool ExtraKeyActive(const GameState& state) const override;

 private:
  void Connect(GameState& state, int cell) const;
  static int Root(std::vector<int16_t>& links, int node);
  static void Union(std::vector<int16_t>& links, int a, int b);

  int size_;
  bool swap_;
};

}  // namespace descent

#endif  // DESCENT_GAME_HEX_H_
