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

#ifndef DESCENT_HARNESS_MATCH_H_
#define DESCENT_HARNESS_MATCH_H_

#include <cstdint>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "descent/eval/evaluator.h"
#include "descent/eval/terminal_eval.h"
#include "descent/game/game.h"
#include "descent/search/search.h"
#include "descent/search/solver.h"
#include "descent/search/table.h"

namespace descent {

using MatchRng = std::mt19937_64;

inline constexpr Action kResign = -1;

// A move-producing engine. Agents may keep per-game state.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual void NewGame() {}
  virtual Action Act(const GameState& state, const MobilityTally& tally, MatchRng& rng) = 0;
  virtual std::string Name() const = 0;
};

// Depth-1 greedy over f_theta; terminal children are valued by f_t.
class GreedyAgent : public Agent {
 public:
  GreedyAgent(const Game& game, const Evaluator& f_theta, const TerminalEval& f_t,
              std::string name = "greedy")
      : game_(game), f_theta_(f_theta), f_t_(f_t), name_(std::move(name)) {}
  Action Act(const GameState& state, const MobilityTally& tally, MatchRng& rng) override;
  std::string Name() const override { return name_; }

 private:
  const Game& game_;
  const Evaluator& f_theta_;
  const TerminalEval& f_t_;
  std::string name_;
};

// Full search per move; the table persists for the whole game, or across
// games when persistent.
class SearchAgent : public Agent {
 public:
  SearchAgent(const Game& game, const Evaluator& f_theta, const TerminalEval& f_t,
              SearchOptions options, std::string name = "", bool persistent = false);
  void NewGame() override {
    if (!persistent_) table_.Clear();
  }
  Action Act(const GameState& state, const MobilityTally& tally, MatchRng& rng) override;
  std::string Name() const override { return name_; }
  const SearchResult& last() const { return last_; }

 private:
  Searcher searcher_;
  SearchTable table_;
  SearchResult last_;
  std::string name_;
  bool persistent_;
};

class RandomAgent : public Agent {
 public:
  explicit RandomAgent(const Game& game) : game_(game) {}
  Action Act(const GameState& state, const MobilityTally& tally, MatchRng& rng) override;
  std::string Name() const override { return "random"; }

 private:
  const Game& game_;
};

// Uniform among game-theoretically optimal moves (small games only).
class OptimalAgent : public Agent {
 public:
  explicit OptimalAgent(const Game& game) : game_(game), solver_(game) {}
  Action Act(const GameState& state, const MobilityTally& tally, MatchRng& rng) override;
  std::string Name() const override { return "optimal"; }

 private:
  const Game& game_;
  Solver solver_;
};

class ResignAgent : public Agent {
 public:
  Action Act(const GameState&, const MobilityTally&, MatchRng&) override { return kResign; }
  std::string Name() const override { return "resign"; }
};

struct MatchOptions {
  int random_opening = 0;            // uniformly random plies before the agents
  std::ostream* diagnostics = nullptr;  // illegal-move dumps
};

struct MatchRecord {
  std::string game;
  std::string first;   // agent names, by color
  std::string second;
  uint64_t seed = 0;
  int result = 0;      // first player's gain
  int plies = 0;
  bool resigned = false;
  bool illegal = false;
  std::vector<Action> actions;
};

// Alternating play to termination. An illegal move or a resignation loses.
MatchRecord PlayMatch(Agent& first, Agent& second, const Game& game, uint64_t seed,
                      const MatchOptions& options = {});

}  // namespace descent

#endif  // DESCENT_HARNESS_MATCH_H_
