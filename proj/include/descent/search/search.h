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

#ifndef DESCENT_SEARCH_SEARCH_H_
#define DESCENT_SEARCH_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "descent/eval/evaluator.h"
#include "descent/eval/terminal_eval.h"
#include "descent/game/game.h"
#include "descent/search/table.h"

namespace descent {

enum class Algorithm {
  kUbfm,              // unbounded best-first minimax
  kCompletedUbfm,     // the same with completion and resolution stop
  kDescent,
  kCompletedDescent,
  kUbfmS,             // completed UBFM with counts; safest decision
  kAlphaBeta,         // iterative deepening
  kMcts,              // UCT with evaluator leaves
};

std::string AlgorithmName(Algorithm algo);
Algorithm ParseAlgorithm(std::string_view name);
bool UsesCompletion(Algorithm algo);

struct Budget {
  enum class Mode { kIterations, kNodes, kSeconds };
  Mode mode = Mode::kIterations;
  double amount = 1;

  static Budget Iterations(int64_t n) { return {Mode::kIterations, static_cast<double>(n)}; }
  static Budget Nodes(int64_t n) { return {Mode::kNodes, static_cast<double>(n)}; }
  static Budget Seconds(double s) { return {Mode::kSeconds, s}; }
  std::string Describe() const;
  static Budget Parse(std::string_view mode, double amount);
};

struct SearchOptions {
  Algorithm algorithm = Algorithm::kDescent;
  Budget budget;
  double uct_c = 0.4;
  // Line-delimited JSON, one record per iteration.
  std::ostream* trace = nullptr;
};

struct SearchResult {
  Action action = -1;        // decision of the algorithm
  double value = 0;          // root value v(s)
  bool resolved = false;
  int8_t r = 0;
  int64_t iterations = 0;
  int64_t evaluations = 0;   // states evaluated by f_theta or f_t
  int depth = 0;             // alpha-beta: deepest completed depth
};

// Runs one search from root, growing the shared table. The tally holds
// the mobility statistics of the game so far (root's own turn excluded).
//
// The table is owned by the caller and persists across the moves of one
// game. Every algorithm leaves an expanded root record whose children hold
// the searched child values, which the learning policies read.
class Searcher {
 public:
  Searcher(const Game& game, const Evaluator& f_theta, const TerminalEval& f_t,
           SearchOptions options);

  SearchResult Search(const GameState& root, const MobilityTally& tally, SearchTable& table);

  const SearchOptions& options() const { return options_; }

 private:
  class Run;

  const Game& game_;
  const Evaluator& f_theta_;
  const TerminalEval& f_t_;
  SearchOptions options_;
};

// Index of the best child under the plain order (v') or, with completion,
// the lexicographic order (r, v'). Ties go to the first action.
size_t BestChild(const SearchTable& table, const NodeRecord& node, bool completion);

// UBFM_s decision: (r, n, v') at a max node, (r, -n, v') at a min node,
// with n counted since the state became root.
size_t SafestChild(const SearchTable& table, const NodeRecord& node);

// Monte Carlo decision: most visits, then better value, then first.
size_t MostVisitedChild(const SearchTable& table, const NodeRecord& node);

// Checks that v is the extremum of child values for the given expanded
// record. Returns false on a mismatch.
bool NodeConsistent(const SearchTable& table, const NodeRecord& node, bool completion);

}  // namespace descent

#endif  // DESCENT_SEARCH_SEARCH_H_
