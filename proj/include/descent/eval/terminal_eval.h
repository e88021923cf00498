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

#ifndef DESCENT_EVAL_TERMINAL_EVAL_H_
#define DESCENT_EVAL_TERMINAL_EVAL_H_

#include <string>
#include <string_view>

#include "descent/game/game.h"

namespace descent {

enum class HeuristicKind {
  kClassic,
  kDepthAdditive,
  kDepthMultiplicative,
  kScore,
  kMobility,
  kPresence,
};

std::string HeuristicName(HeuristicKind kind);
HeuristicKind ParseHeuristic(std::string_view name);

// Per-player running sums of legal-move counts, taken on each player's
// turns only. Carried along a game trajectory and along search paths.
struct MobilityTally {
  double sum[2] = {0, 0};
  int turns[2] = {0, 0};

  void Record(Player mover, int moves) {
    sum[Index(mover)] += moves;
    ++turns[Index(mover)];
  }
  // Mean count; 1 for a player who never had a turn.
  double Mean(Player player) const {
    const int i = Index(player);
    return turns[i] == 0 ? 1.0 : sum[i] / turns[i];
  }
};

// Terminal evaluation f_t. Values are from the first player's point of
// view. When normalization is on, every raw value is divided by a fixed
// positive per-heuristic constant (see divisor()), at training and at
// inference alike.
class TerminalEval {
 public:
  // Throws UnsupportedFeature when the heuristic needs data the game does
  // not provide (score outside Othello, presence without pieces).
  TerminalEval(const Game& game, HeuristicKind kind, bool normalize = true);

  HeuristicKind kind() const { return kind_; }
  double divisor() const { return divisor_; }
  // The network gets a tanh output exactly for the classic gain.
  bool tanh_output() const { return kind_ == HeuristicKind::kClassic; }

  double Raw(const GameState& state, const MobilityTally& tally) const;
  double operator()(const GameState& state, const MobilityTally& tally) const {
    return Raw(state, tally) / divisor_;
  }

  // The depth length l for a terminal state (depth kinds only).
  double DepthLength(const GameState& state) const;

 private:
  const Game& game_;
  HeuristicKind kind_;
  double divisor_ = 1;
};

}  // namespace descent

#endif  // DESCENT_EVAL_TERMINAL_EVAL_H_
