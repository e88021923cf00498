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

#include "descent/eval/terminal_eval.h"

#include <algorithm>
#include <array>

namespace descent {
namespace {

constexpr std::array<std::string_view, 6> kNames = {
    "classic", "depth_additive", "depth_multiplicative", "score", "mobility", "presence"};

}  // namespace

std::string HeuristicName(HeuristicKind kind) {
  return std::string(kNames[static_cast<int>(kind)]);
}

HeuristicKind ParseHeuristic(std::string_view name) {
  for (size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<HeuristicKind>(i);
  }
  throw std::invalid_argument("unknown heuristic '" + std::string(name) +
                              "' (expected classic, depth_additive, depth_multiplicative, "
                              "score, mobility or presence)");
}

TerminalEval::TerminalEval(const Game& game, HeuristicKind kind, bool normalize)
    : game_(game), kind_(kind) {
  if (kind == HeuristicKind::kScore && !game.HasScore()) {
    throw UnsupportedFeature("heuristic 'score' is not supported for " + game.Describe());
  }
  if (kind == HeuristicKind::kPresence && !game.HasPieces()) {
    throw UnsupportedFeature("heuristic 'presence' is not supported for " + game.Describe());
  }
  if (!normalize) return;
  switch (kind) {
    case HeuristicKind::kDepthAdditive:
      divisor_ = game.kind() == GameKind::kHex ? game.num_cells() + 1 : game.MaxActions();
      break;
    case HeuristicKind::kScore:
    case HeuristicKind::kPresence:
      divisor_ = game.num_cells();
      break;
    default:
      divisor_ = 1;
  }
}

double TerminalEval::DepthLength(const GameState& state) const {
  const int p = state.ply;
  if (kind_ == HeuristicKind::kDepthMultiplicative) {
    return game_.MaxActions() / std::max(p, 1);
  }
  if (game_.kind() == GameKind::kHex) {
    // Same as P - p + 1 (P counts the swap move when enabled, and the
    // swap move is the only one that adds no stone).
    return static_cast<double>(std::count(state.cells.begin(), state.cells.end(), kEmpty)) + 1;
  }
  if (game_.MaxActionsExact()) return game_.MaxActions() - p + 1;
  return std::max(1.0, game_.MaxActions() - p);
}

double TerminalEval::Raw(const GameState& state, const MobilityTally& tally) const {
  const int gain = game_.Gain(state);
  if (gain == 0) return 0;
  switch (kind_) {
    case HeuristicKind::kClassic:
      return gain;
    case HeuristicKind::kDepthAdditive:
    case HeuristicKind::kDepthMultiplicative:
      return gain * DepthLength(state);
    case HeuristicKind::kScore:
      // A win with a non-positive disc lead cannot happen in Othello, but
      // the sign is kept consistent with the gain regardless.
      return gain > 0 ? std::max(game_.Score(state), 1) : std::min(game_.Score(state), -1);
    case HeuristicKind::kMobility: {
      const double m1 = tally.Mean(Player::kFirst), m2 = tally.Mean(Player::kSecond);
      return gain > 0 ? m1 / m2 : -m2 / m1;
    }
    case HeuristicKind::kPresence: {
      const int diff = game_.PieceCount(state, Player::kFirst) -
                       game_.PieceCount(state, Player::kSecond);
      return gain > 0 ? std::max(diff, 1) : std::min(diff, -1);
    }
  }
  return gain;
}

}  // namespace descent
