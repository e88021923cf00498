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

#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "descent/eval/evaluator.h"
#include "descent/eval/terminal_eval.h"
#include "descent/game/game.h"
#include "descent/search/search.h"
#include "descent/search/solver.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace descent {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Deterministic pseudo-random value in (-0.9, 0.9) per state.
std::unique_ptr<FunctionEvaluator> HashedEvaluator(uint64_t salt) {
  return std::make_unique<FunctionEvaluator>([salt](const GameState& s) {
    uint64_t x = (s.key ^ salt) * 0x9e3779b97f4a7c15ULL;
    x ^= x >> 29;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 32;
    return (static_cast<double>(x >> 11) / 9007199254740992.0) * 1.8 - 0.9;
  });
}

// Plain depth-limited minimax, no pruning, no memo.
double Minimax(const Game& game, const GameState& s, int depth, const Evaluator& f,
               const TerminalEval& ft, MobilityTally tally) {
  if (s.terminal()) return ft(s, tally);
  if (depth == 0) return f.Evaluate(s);
  const auto actions = game.LegalActions(s);
  tally.Record(s.to_move, static_cast<int>(actions.size()));
  const int sign = Sign(s.to_move);
  double best = -sign * kInf;
  for (Action a : actions) {
    const double v = Minimax(game, game.Apply(s, a), depth - 1, f, ft, tally);
    if (sign * v > sign * best) best = v;
  }
  return best;
}

int GainMinimax(const Game& game, const GameState& s) {
  return static_cast<int>(Minimax(game, s, 1000, *FunctionEvaluator::Constant(0),
                                  TerminalEval(game, HeuristicKind::kClassic), {}));
}

SearchResult RunSearch(const Game& game, const Evaluator& f, const TerminalEval& ft,
                       Algorithm algo, Budget budget, SearchTable& table,
                       const GameState& root, double c = 0.4, std::ostream* trace = nullptr) {
  SearchOptions opt;
  opt.algorithm = algo;
  opt.budget = budget;
  opt.uct_c = c;
  opt.trace = trace;
  Searcher searcher(game, f, ft, opt);
  return searcher.Search(root, {}, table);
}

TEST(SearchNamesTest, RoundTrip) {
  for (int i = 0; i < 7; ++i) {
    const auto a = static_cast<Algorithm>(i);
    EXPECT_EQ(ParseAlgorithm(AlgorithmName(a)), a);
  }
  EXPECT_THROW(ParseAlgorithm("minimax"), std::invalid_argument);
  EXPECT_THROW(Budget::Parse("iterations", 0), std::invalid_argument);
  EXPECT_THROW(Budget::Parse("moves", 5), std::invalid_argument);
}

TEST(SearchTest, RejectsBadInput) {
  auto game = MakeGame({GameKind::kTicTacToe, 3});
  auto f = FunctionEvaluator::Constant(0);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchOptions opt;
  opt.budget = Budget::Iterations(0);
  EXPECT_THROW(Searcher(*game, *f, ft, opt), std::invalid_argument);
  SearchTable table;
  const GameState done = game->Deserialize("tictactoe 3 xxx/oo./... 2 5");
  EXPECT_THROW(RunSearch(*game, *f, ft, Algorithm::kDescent, Budget::Iterations(5), table, done),
               ContractViolation);
}

struct OracleCase {
  GameKind kind;
  int size;
  Algorithm algo;
  uint64_t salt;
};

class OracleTest : public ::testing::TestWithParam<OracleCase> {};

TEST_P(OracleTest, ExhaustiveMatchesMinimax) {
  const OracleCase& c = GetParam();
  auto game = MakeGame({c.kind, c.size});
  const GameState root = game->InitialState();
  const int truth = GainMinimax(*game, root);
  auto f = HashedEvaluator(c.salt);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  const SearchResult r =
      RunSearch(*game, *f, ft, c.algo, Budget::Iterations(1000000), table, root);
  EXPECT_EQ(r.value, truth);
  Solver solver(*game);
  const auto optimal = solver.OptimalActions(root);
  EXPECT_NE(std::find(optimal.begin(), optimal.end(), r.action), optimal.end())
      << game->ActionToString(r.action);
  if (UsesCompletion(c.algo) || c.algo == Algorithm::kAlphaBeta) {
    EXPECT_TRUE(r.resolved);
    EXPECT_EQ(r.r, truth);
  }
}

std::vector<OracleCase> OracleCases() {
  std::vector<OracleCase> out;
  for (auto [kind, size] : {std::pair{GameKind::kTicTacToe, 3}, std::pair{GameKind::kHex, 3}}) {
    for (Algorithm a : {Algorithm::kUbfm, Algorithm::kCompletedUbfm, Algorithm::kDescent,
                        Algorithm::kCompletedDescent, Algorithm::kUbfmS, Algorithm::kAlphaBeta}) {
      for (uint64_t salt : {1, 2, 3}) out.push_back({kind, size, a, salt});
    }
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(Games, OracleTest, ::testing::ValuesIn(OracleCases()),
                         [](const auto& info) {
                           return std::string(GameKindName(info.param.kind)) + "_" +
                                  AlgorithmName(info.param.algo) + "_" +
                                  std::to_string(info.param.salt);
                         });

TEST(SolverTest, KnownValues) {
  auto ttt = MakeGame({GameKind::kTicTacToe, 3});
  Solver s1(*ttt);
  EXPECT_EQ(s1.Value(ttt->InitialState()), 0);
  EXPECT_EQ(s1.Value(ttt->Deserialize("tictactoe 3 xx./oo./... 1 4")), 1);
  auto hex = MakeGame({GameKind::kHex, 3});
  Solver s2(*hex);
  EXPECT_EQ(s2.Value(hex->InitialState()), 1);
  // Winning openings agree with plain minimax; the centre is one of them.
  std::vector<Action> winning;
  for (Action a : hex->LegalActions(hex->InitialState())) {
    if (GainMinimax(*hex, hex->Apply(hex->InitialState(), a)) == 1) winning.push_back(a);
  }
  EXPECT_EQ(s2.OptimalActions(hex->InitialState()), winning);
  EXPECT_NE(std::find(winning.begin(), winning.end(), 4), winning.end());
  auto hex_swap = MakeGame({GameKind::kHex, 3, true});
  Solver s3(*hex_swap);
  EXPECT_EQ(s3.Value(hex_swap->InitialState()), -1);
}

TEST(UbfmTest, OneIterationPicksBestChild) {
  auto game = MakeGame({GameKind::kTicTacToe, 3});
  const GameState root = game->InitialState();
  // Centre child worth 5, the others 3.
  FunctionEvaluator f([](const GameState& s) { return s.cells[4] == kFirstStone ? 5.0 : 3.0; });
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  const SearchResult r = RunSearch(*game, f, ft, Algorithm::kUbfm, Budget::Iterations(1), table, root);
  EXPECT_EQ(r.action, 4);
  EXPECT_EQ(r.value, 5.0);
  EXPECT_EQ(r.iterations, 1);
}

TEST(UbfmTest, IterationsExpandDistinctLeaves) {
  auto game = MakeGame({GameKind::kHex, 5});
  auto f = HashedEvaluator(9);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  std::ostringstream trace;
  RunSearch(*game, *f, ft, Algorithm::kUbfm, Budget::Iterations(60), table, game->InitialState(),
            0.4, &trace);
  std::istringstream in(trace.str());
  std::set<std::vector<std::string>> paths;
  std::string line;
  int64_t last_evals = 0;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto rec = nlohmann::json::parse(line);
    const auto path = rec["path"].get<std::vector<std::string>>();
    EXPECT_TRUE(paths.insert(path).second) << line;
    EXPECT_GT(rec["evaluations"].get<int64_t>(), last_evals);
    last_evals = rec["evaluations"].get<int64_t>();
    ++lines;
  }
  EXPECT_EQ(lines, 60);
}

TEST(DescentTest, OneIterationReachesTerminal) {
  auto game = MakeGame({GameKind::kHex, 4});
  auto f = HashedEvaluator(4);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  std::ostringstream trace;
  RunSearch(*game, *f, ft, Algorithm::kDescent, Budget::Iterations(1), table,
            game->InitialState(), 0.4, &trace);
  const auto rec = nlohmann::json::parse(trace.str());
  GameState s = game->InitialState();
  for (const auto& m : rec["path"]) s = game->Apply(s, game->ParseAction(s, m.get<std::string>()));
  EXPECT_TRUE(s.terminal());
  const auto values = rec["values"].get<std::vector<double>>();
  ASSERT_EQ(values.size(), rec["path"].size() + 1);
  EXPECT_EQ(std::abs(values.back()), 1.0);
  // Every non-terminal state on the path was expanded and backed up.
  s = game->InitialState();
  for (const auto& m : rec["path"]) {
    const NodeRecord* node = table.Find(s.key);
    ASSERT_NE(node, nullptr);
    EXPECT_TRUE(node->expanded);
    EXPECT_TRUE(NodeConsistent(table, *node, false));
    s = game->Apply(s, game->ParseAction(s, m.get<std::string>()));
  }
}

TEST(DescentTest, SeesLossThatUbfmMisses) {
  auto game = MakeGame({GameKind::kTicTacToe, 3});
  // X to move; O threatens c2. Playing c3 looks best to the evaluator but
  // loses at once.
  const GameState root = game->Deserialize("tictactoe 3 x../oo./x.. 1 4");
  FunctionEvaluator f([](const GameState& s) { return s.cells[8] == kFirstStone ? 0.9 : 0.0; });
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable t1, t2;
  const SearchResult ubfm = RunSearch(*game, f, ft, Algorithm::kUbfm, Budget::Iterations(1), t1, root);
  const SearchResult descent =
      RunSearch(*game, f, ft, Algorithm::kDescent, Budget::Iterations(1), t2, root);
  EXPECT_EQ(ubfm.value, 0.9);
  EXPECT_EQ(descent.value, 0.0);
  EXPECT_EQ(t2.Find(game->Apply(root, 8).key)->v, -1.0);
  EXPECT_NE(descent.action, 8);
}

TEST(DescentTest, TableConsistentOnPathAfterEveryIteration) {
  for (Algorithm algo : {Algorithm::kUbfm, Algorithm::kDescent, Algorithm::kCompletedDescent,
                         Algorithm::kUbfmS}) {
    auto game = MakeGame({GameKind::kTicTacToe, 3});
    auto f = HashedEvaluator(5);
    TerminalEval ft(*game, HeuristicKind::kClassic);
    SearchTable table;
    SearchOptions opt;
    opt.algorithm = algo;
    opt.budget = Budget::Iterations(1);
    Searcher searcher(*game, *f, ft, opt);
    std::vector<int64_t> last_n;
    for (int i = 0; i < 300; ++i) {
      std::ostringstream trace;
      opt.trace = &trace;
      Searcher traced(*game, *f, ft, opt);
      if (table.Find(game->InitialState().key) && table.Find(game->InitialState().key)->resolved &&
          UsesCompletion(algo)) {
        break;
      }
      traced.Search(game->InitialState(), {}, table);
      GameState s = game->InitialState();
      const auto rec = nlohmann::json::parse(trace.str());
      for (const auto& m : rec["path"]) {
        EXPECT_TRUE(NodeConsistent(table, *table.Find(s.key), UsesCompletion(algo)));
        s = game->Apply(s, game->ParseAction(s, m.get<std::string>()));
      }
      const NodeRecord& root = *table.Find(game->InitialState().key);
      if (!last_n.empty()) {
        for (size_t k = 0; k < root.n.size(); ++k) EXPECT_GE(root.n[k], last_n[k]);
      }
      last_n = root.n;
    }
  }
}

// Builds a max or min node with synthetic children for decision rules.
struct FakeTree {
  SearchTable table;
  NodeRecord* node = nullptr;

  FakeTree(Player mover, std::vector<std::tuple<int, bool, double, int64_t>> kids) {
    GameState root;
    root.key = 1000;
    root.to_move = mover;
    node = &table.Insert(root);
    node->expanded = true;
    for (size_t i = 0; i < kids.size(); ++i) {
      GameState child;
      child.key = i + 1;
      NodeRecord& rec = table.Insert(child);
      std::tie(rec.r, rec.resolved, rec.v, std::ignore) = kids[i];
      node->actions.push_back(static_cast<Action>(i));
      node->children.push_back(child.key);
      node->n.push_back(std::get<3>(kids[i]));
      node->n_base.push_back(0);
    }
  }
};

TEST(CompletionTest, ResolvedWinBeatsHigherValue) {
  FakeTree t(Player::kFirst, {{0, false, 0.9, 0}, {1, true, 0.5, 0}});
  EXPECT_EQ(BestChild(t.table, *t.node, false), 0u);
  EXPECT_EQ(BestChild(t.table, *t.node, true), 1u);
}

TEST(CompletionTest, AvoidsResolvedLoss) {
  FakeTree t(Player::kFirst, {{-1, true, 0.8, 0}, {0, false, -0.3, 0}});
  EXPECT_EQ(BestChild(t.table, *t.node, true), 1u);
  FakeTree m(Player::kSecond, {{1, true, -0.8, 0}, {0, false, 0.3, 0}});
  EXPECT_EQ(BestChild(m.table, *m.node, true), 1u);
}

TEST(CompletionTest, RealGameResolvedWin) {
  auto game = MakeGame({GameKind::kTicTacToe, 3});
  const GameState root = game->Deserialize("tictactoe 3 xx./oo./... 1 4");
  // Blocking-free c2 looks best, but c1 wins at once for a smaller value.
  FunctionEvaluator f([](const GameState& s) { return s.cells[5] == kFirstStone ? 0.9 : 0.0; });
  TerminalEval ft(*game, HeuristicKind::kDepthAdditive);
  SearchTable t1, t2;
  const SearchResult plain = RunSearch(*game, f, ft, Algorithm::kUbfm, Budget::Iterations(1), t1, root);
  EXPECT_EQ(plain.action, 5);
  const SearchResult done =
      RunSearch(*game, f, ft, Algorithm::kCompletedDescent, Budget::Iterations(50), t2, root);
  EXPECT_EQ(done.action, 2);
  EXPECT_TRUE(done.resolved);
  EXPECT_EQ(done.r, 1);
  EXPECT_EQ(done.iterations, 1);
}

TEST(CompletionTest, NeverPicksLossWhenAlternativeExists) {
  // Over many tables from partial searches, the completed decision never
  // lands on a resolved loss if some child is not one.
  for (uint64_t salt = 0; salt < 20; ++salt) {
    auto game = MakeGame({GameKind::kTicTacToe, 3});
    auto f = HashedEvaluator(salt);
    TerminalEval ft(*game, HeuristicKind::kClassic);
    SearchTable table;
    std::mt19937_64 rng(salt);
    GameState s = game->InitialState();
    while (!s.terminal()) {
      const SearchResult r = RunSearch(*game, *f, ft, Algorithm::kCompletedDescent,
                                       Budget::Iterations(1 + rng() % 30), table, s);
      const NodeRecord& node = *table.Find(s.key);
      const int sign = Sign(s.to_move);
      bool has_alternative = false;
      for (size_t i = 0; i < node.children.size(); ++i) {
        const NodeRecord& c = table.Child(node, i);
        if (!(c.resolved && c.r == -sign)) has_alternative = true;
      }
      const NodeRecord& chosen = table.Child(node, BestChild(table, node, true));
      if (has_alternative) {
        EXPECT_FALSE(chosen.resolved && chosen.r == -sign);
      }
      const auto actions = game->LegalActions(s);
      s = game->Apply(s, rng() % 2 ? r.action : actions[rng() % actions.size()]);
    }
  }
}

TEST(CompletedDescentTest, ResolvesHex3AgainstSolver) {
  auto game = MakeGame({GameKind::kHex, 3});
  auto f = HashedEvaluator(11);
  TerminalEval ft(*game, HeuristicKind::kDepthAdditive);
  SearchTable table;
  const SearchResult r = RunSearch(*game, *f, ft, Algorithm::kCompletedDescent,
                                   Budget::Iterations(1000000), table, game->InitialState());
  Solver solver(*game);
  EXPECT_TRUE(r.resolved);
  EXPECT_EQ(r.r, 1);
  EXPECT_EQ(r.r, solver.Value(game->InitialState()));
  // Every resolved record agrees with the solver.
  for (const auto& [key, rec] : table.records()) {
    if (rec.resolved) {
      EXPECT_EQ(rec.r, solver.Value(rec.state)) << game->Serialize(rec.state);
    }
  }
}

TEST(UbfmSTest, SafestDecisions) {
  FakeTree most(Player::kFirst, {{0, false, 5, 7}, {0, false, 2, 30}});
  EXPECT_EQ(SafestChild(most.table, *most.node), 1u);
  FakeTree tie(Player::kFirst, {{0, false, 2, 9}, {0, false, 5, 9}});
  EXPECT_EQ(SafestChild(tie.table, *tie.node), 1u);
  FakeTree win(Player::kFirst, {{0, false, 5, 100}, {1, true, 0.1, 1}});
  EXPECT_EQ(SafestChild(win.table, *win.node), 1u);
  // Minimizing player: most selected, then the lower value.
  FakeTree min_node(Player::kSecond, {{0, false, -5, 7}, {0, false, 2, 30}, {0, false, 1, 30}});
  EXPECT_EQ(SafestChild(min_node.table, *min_node.node), 2u);
  // Counts are taken since the state became root.
  FakeTree based(Player::kFirst, {{0, false, 0, 50}, {0, false, 0, 20}});
  based.node->n_base = {45, 0};
  EXPECT_EQ(SafestChild(based.table, *based.node), 1u);
}

TEST(UbfmSTest, CountsTrackSelections) {
  auto game = MakeGame({GameKind::kHex, 4});
  auto f = HashedEvaluator(3);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  const SearchResult r = RunSearch(*game, *f, ft, Algorithm::kUbfmS, Budget::Iterations(200),
                                   table, game->InitialState());
  const NodeRecord& root = *table.Find(game->InitialState().key);
  int64_t total = 0;
  for (int64_t n : root.n) total += n;
  // The first iteration only expands the root.
  EXPECT_EQ(total, r.iterations - 1);
  const size_t pick = SafestChild(table, root);
  EXPECT_EQ(root.actions[pick], r.action);
  for (int64_t n : root.n) EXPECT_LE(n, root.n[pick]);
}

TEST(AlphaBetaTest, MatchesDepthLimitedMinimax) {
  for (auto [kind, size] : {std::pair{GameKind::kHex, 4}, std::pair{GameKind::kTicTacToe, 3},
                            std::pair{GameKind::kBreakthrough, 5}}) {
    auto game = MakeGame({kind, size});
    auto f = HashedEvaluator(7);
    TerminalEval ft(*game, HeuristicKind::kDepthAdditive);
    std::mt19937_64 rng(8);
    int tested = 0;
    while (tested < 100 / 3 + 1) {
      GameState s = game->InitialState();
      const int plies = static_cast<int>(rng() % 6);
      for (int i = 0; i < plies && !s.terminal(); ++i) {
        const auto a = game->LegalActions(s);
        s = game->Apply(s, a[rng() % a.size()]);
      }
      if (s.terminal()) continue;
      const int depth = 1 + static_cast<int>(rng() % 4);
      SearchTable table;
      const SearchResult r =
          RunSearch(*game, *f, ft, Algorithm::kAlphaBeta, Budget::Iterations(depth), table, s);
      const double truth = Minimax(*game, s, depth, *f, ft, {});
      ASSERT_DOUBLE_EQ(r.value, truth) << game->Serialize(s) << " depth " << depth;
      // Root child values are exact at depth - 1.
      const NodeRecord& root = *table.Find(s.key);
      for (size_t i = 0; i < root.children.size(); ++i) {
        const GameState child = game->Apply(s, root.actions[i]);
        EXPECT_DOUBLE_EQ(table.Child(root, i).v, Minimax(*game, child, depth - 1, *f, ft, {}));
      }
      ++tested;
    }
  }
}

TEST(AlphaBetaTest, DepthOneIsGreedy) {
  auto game = MakeGame({GameKind::kHex, 4});
  auto f = HashedEvaluator(12);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  const GameState root = game->InitialState();
  SearchTable table;
  const SearchResult r = RunSearch(*game, *f, ft, Algorithm::kAlphaBeta, Budget::Iterations(1), table, root);
  Action best = -1;
  double best_v = -kInf;
  for (Action a : game->LegalActions(root)) {
    const double v = f->Evaluate(game->Apply(root, a));
    if (v > best_v) {
      best_v = v;
      best = a;
    }
  }
  EXPECT_EQ(r.action, best);
  EXPECT_EQ(r.depth, 1);
}

TEST(AlphaBetaTest, MateInOneAtDepthOne) {
  auto game = MakeGame({GameKind::kTicTacToe, 3});
  const GameState root = game->Deserialize("tictactoe 3 xx./oo./... 1 4");
  auto f = HashedEvaluator(1);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  const SearchResult r = RunSearch(*game, *f, ft, Algorithm::kAlphaBeta, Budget::Iterations(1), table, root);
  EXPECT_EQ(r.action, 2);
  EXPECT_EQ(r.value, 1.0);
}

TEST(AlphaBetaTest, NodeBudgetStopsEarly) {
  auto game = MakeGame({GameKind::kHex, 5});
  auto f = HashedEvaluator(2);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  const SearchResult r = RunSearch(*game, *f, ft, Algorithm::kAlphaBeta, Budget::Nodes(2000),
                                   table, game->InitialState());
  EXPECT_GE(r.depth, 1);
  EXPECT_LT(r.depth, 25);
}

TEST(MctsTest, SingleActionReturned) {
  auto game = MakeGame({GameKind::kTicTacToe, 3});
  const GameState root = game->Deserialize("tictactoe 3 xox/xoo/ox. 1 8");
  ASSERT_EQ(game->LegalActions(root).size(), 1u);
  auto f = HashedEvaluator(1);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  EXPECT_EQ(RunSearch(*game, *f, ft, Algorithm::kMcts, Budget::Iterations(5), table, root).action, 8);
}

TEST(MctsTest, MateInOneMostVisited) {
  auto game = MakeGame({GameKind::kTicTacToe, 3});
  const GameState root = game->Deserialize("tictactoe 3 xx./oo./... 1 4");
  auto f = HashedEvaluator(6);
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  const SearchResult r = RunSearch(*game, *f, ft, Algorithm::kMcts, Budget::Iterations(1000), table, root);
  EXPECT_EQ(r.action, 2);
  const NodeRecord& node = *table.Find(root.key);
  for (size_t i = 0; i < node.n.size(); ++i) {
    if (node.actions[i] != 2) {
      EXPECT_LT(node.n[i], node.n[0]);
    }
  }
}

TEST(MctsTest, ZeroExplorationExploitsDominantChild) {
  auto game = MakeGame({GameKind::kTicTacToe, 3});
  FunctionEvaluator f([](const GameState& s) { return s.cells[4] == kFirstStone ? 0.8 : -0.9; });
  TerminalEval ft(*game, HeuristicKind::kClassic);
  SearchTable table;
  const SearchResult r = RunSearch(*game, f, ft, Algorithm::kMcts, Budget::Iterations(100), table,
                                   game->InitialState(), 0.0);
  const NodeRecord& root = *table.Find(game->InitialState().key);
  EXPECT_EQ(root.n[4], 99);
  EXPECT_EQ(r.action, 4);
}

TEST(SearchTest, DeterministicAcrossRuns) {
  for (Algorithm algo : {Algorithm::kUbfm, Algorithm::kDescent, Algorithm::kCompletedDescent,
                         Algorithm::kUbfmS, Algorithm::kAlphaBeta, Algorithm::kMcts}) {
    auto game = MakeGame({GameKind::kHex, 4});
    auto f = HashedEvaluator(13);
    TerminalEval ft(*game, HeuristicKind::kDepthAdditive);
    std::string traces[2];
    for (std::string& out : traces) {
      SearchTable table;
      std::ostringstream trace;
      RunSearch(*game, *f, ft, algo, Budget::Iterations(algo == Algorithm::kAlphaBeta ? 3 : 300),
                table, game->InitialState(), 0.4, &trace);
      out = trace.str();
    }
    EXPECT_FALSE(traces[0].empty());
    EXPECT_EQ(traces[0], traces[1]) << AlgorithmName(algo);
  }
}

TEST(SearchTest, ResolvedEnginePlaysPerfectlyOnSmallGames) {
  // A completed engine never loses from a resolved won (or drawn) start
  // against random or optimal opponents.
  for (auto [kind, size] : {std::pair{GameKind::kTicTacToe, 3}, std::pair{GameKind::kHex, 3}}) {
    auto game = MakeGame({kind, size});
    auto f = HashedEvaluator(21);
    TerminalEval ft(*game, HeuristicKind::kClassic);
    Solver solver(*game);
    const int value = solver.Value(game->InitialState());
    std::mt19937_64 rng(22);
    for (int g = 0; g < 100; ++g) {
      SearchTable table;
      GameState s = game->InitialState();
      const bool optimal_opponent = g % 2 == 0;
      while (!s.terminal()) {
        Action a;
        if (s.to_move == Player::kFirst) {
          a = RunSearch(*game, *f, ft, Algorithm::kCompletedDescent, Budget::Iterations(1000000),
                        table, s).action;
        } else if (optimal_opponent) {
          const auto best = solver.OptimalActions(s);
          a = best[rng() % best.size()];
        } else {
          const auto all = game->LegalActions(s);
          a = all[rng() % all.size()];
        }
        s = game->Apply(s, a);
      }
      EXPECT_GE(game->Gain(s), value);
    }
  }
}

}  // namespace
}  // namespace descent
