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

#include "descent/harness/match.h"

#include <algorithm>
#include <iostream>

namespace descent {

Action GreedyAgent::Act(const GameState& state, const MobilityTally& tally, MatchRng&) {
  const std::vector<Action> actions = game_.LegalActions(state);
  MobilityTally next = tally;
  next.Record(state.to_move, static_cast<int>(actions.size()));
  std::vector<GameState> children;
  children.reserve(actions.size());
  for (Action a : actions) children.push_back(game_.Apply(state, a));
  std::vector<double> values = f_theta_.EvaluateChildren(children);
  for (size_t i = 0; i < children.size(); ++i) {
    if (children[i].terminal()) values[i] = f_t_(children[i], next);
  }
  const int sign = Sign(state.to_move);
  size_t best = 0;
  for (size_t i = 1; i < values.size(); ++i) {
    if (sign * values[i] > sign * values[best]) best = i;
  }
  return actions[best];
}

SearchAgent::SearchAgent(const Game& game, const Evaluator& f_theta, const TerminalEval& f_t,
                         SearchOptions options, std::string name, bool persistent)
    : searcher_(game, f_theta, f_t, options), name_(std::move(name)), persistent_(persistent) {
  if (name_.empty()) name_ = AlgorithmName(options.algorithm);
}

Action SearchAgent::Act(const GameState& state, const MobilityTally& tally, MatchRng&) {
  last_ = searcher_.Search(state, tally, table_);
  return last_.action;
}

Action RandomAgent::Act(const GameState& state, const MobilityTally&, MatchRng& rng) {
  const std::vector<Action> actions = game_.LegalActions(state);
  return actions[std::uniform_int_distribution<size_t>(0, actions.size() - 1)(rng)];
}

Action OptimalAgent::Act(const GameState& state, const MobilityTally&, MatchRng& rng) {
  const std::vector<Action> actions = solver_.OptimalActions(state);
  return actions[std::uniform_int_distribution<size_t>(0, actions.size() - 1)(rng)];
}

MatchRecord PlayMatch(Agent& first, Agent& second, const Game& game, uint64_t seed,
                      const MatchOptions& options) {
  MatchRecord rec;
  rec.game = game.Describe();
  rec.first = first.Name();
  rec.second = second.Name();
  rec.seed = seed;
  MatchRng rng(seed);
  first.NewGame();
  second.NewGame();
  GameState s = game.InitialState();
  MobilityTally tally;
  while (!s.terminal()) {
    const std::vector<Action> legal = game.LegalActions(s);
    Action a;
    if (rec.plies < options.random_opening) {
      a = legal[std::uniform_int_distribution<size_t>(0, legal.size() - 1)(rng)];
    } else {
      Agent& agent = s.to_move == Player::kFirst ? first : second;
      a = agent.Act(s, tally, rng);
      if (a == kResign) {
        rec.resigned = true;
        rec.result = -Sign(s.to_move);
        return rec;
      }
      if (std::find(legal.begin(), legal.end(), a) == legal.end()) {
        // Never expected; keep enough context to reproduce.
        rec.illegal = true;
        rec.result = -Sign(s.to_move);
        std::ostream& out = options.diagnostics ? *options.diagnostics : std::cerr;
        out << "illegal move " << a << " by " << agent.Name() << " at ply " << rec.plies
            << " seed " << seed << "\n" << game.Serialize(s) << "\n" << game.ToAscii(s) << "\n";
        return rec;
      }
    }
    tally.Record(s.to_move, static_cast<int>(legal.size()));
    s = game.Apply(s, a);
    rec.actions.push_back(a);
    ++rec.plies;
  }
  rec.result = game.Gain(s);
  return rec;
}

}  // namespace descent
