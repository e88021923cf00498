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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "descent/game/breakthrough.h"
#include "descent/game/clobber.h"
#include "descent/game/game.h"
#include "descent/game/game_lengths.h"
#include "descent/game/hex.h"
#include "descent/game/othello.h"
#include "descent/game/tictactoe.h"
#include "gtest/gtest.h"

namespace descent {
namespace {

std::vector<GameConfig> AllGameConfigs() {
  return {{GameKind::kTicTacToe, 3, false}, {GameKind::kHex, 3, false},
          {GameKind::kHex, 5, true},        {GameKind::kHex, 7, false},
          {GameKind::kOthello, 4, false},   {GameKind::kOthello, 6, false},
          {GameKind::kBreakthrough, 5, false}, {GameKind::kBreakthrough, 6, false},
          {GameKind::kClobber, 4, false},   {GameKind::kClobber, 5, false}};
}

TEST(HexTest, EmptyBoardHasOneActionPerCell) {
  Hex hex(3, false);
  EXPECT_EQ(hex.LegalActions(hex.InitialState()).size(), 9u);
}

TEST(HexTest, SwapOfferedOnlyOnSecondPlayersFirstMove) {
  Hex hex(3, true);
  GameState s = hex.InitialState();
  EXPECT_EQ(hex.LegalActions(s).size(), 9u);
  s = hex.Apply(s, 4);
  auto actions = hex.LegalActions(s);
  ASSERT_EQ(actions.size(), 9u);
  EXPECT_EQ(actions.back(), hex.swap_action());
  s = hex.Apply(s, 0);
  actions = hex.LegalActions(s);
  EXPECT_EQ(actions.size(), 7u);
  EXPECT_EQ(std::count(actions.begin(), actions.end(), hex.swap_action()), 0);
}

TEST(HexTest, SwapReflectsAndExchangesColours) {
  Hex hex(3, true);
  GameState s = hex.Apply(hex.InitialState(), hex.ParseAction(hex.InitialState(), "b1"));
  GameState swapped = hex.Apply(s, hex.swap_action());
  EXPECT_EQ(swapped.ply, 2);
  EXPECT_EQ(swapped.to_move, Player::kFirst);
  // b1 is (row 0, col 1); its reflection is (row 1, col 0) = a2.
  EXPECT_EQ(hex.Serialize(swapped), "hex 3 .../o../... 1 2");
  EXPECT_EQ(swapped.key, hex.ComputeKey(swapped));
  EXPECT_EQ(hex.LegalActions(swapped).size(), 8u);
}

TEST(HexTest, FirstPlayerConnectingTopToBottomWins) {
  Hex hex(3, false);
  GameState s = hex.Deserialize("hex 3 x../x../x.o 2 5");
  ASSERT_TRUE(s.terminal());
  EXPECT_EQ(hex.Gain(s), 1);
  GameState t = hex.Deserialize("hex 3 ooo/xx./x.. 1 6");
  ASSERT_TRUE(t.terminal());
  EXPECT_EQ(hex.Gain(t), -1);
}

TEST(HexTest, EveryFullSizeThreeBoardHasExactlyOneWinner) {
  Hex hex(3, false);
  for (int mask = 0; mask < 512; ++mask) {
    std::string board;
    for (int i = 0; i < 9; ++i) {
      if (i > 0 && i % 3 == 0) board += '/';
      board += (mask >> i) & 1 ? 'x' : 'o';
    }
    GameState s = hex.Deserialize("hex 3 " + board + " 1 9");
    ASSERT_TRUE(s.terminal()) << board;
    const bool first = hex.FindGroup(s, hex.top()) == hex.FindGroup(s, hex.bottom());
    const bool second = hex.FindGroup(s, hex.left()) == hex.FindGroup(s, hex.right());
    EXPECT_NE(first, second) << board;
    EXPECT_NE(hex.Gain(s), 0);
  }
}

TEST(HexTest, RandomFullBoardsNeverDraw) {
  std::mt19937_64 rng(7);
  for (int n = 4; n <= 7; ++n) {
    Hex hex(n, false);
    for (int trial = 0; trial < 200; ++trial) {
      std::string board;
      for (int i = 0; i < n * n; ++i) {
        if (i > 0 && i % n == 0) board += '/';
        board += rng() & 1 ? 'x' : 'o';
      }
      GameState s = hex.Deserialize("hex " + std::to_string(n) + " " + board + " 1 0");
      ASSERT_TRUE(s.terminal());
      const bool first = hex.FindGroup(s, hex.top()) == hex.FindGroup(s, hex.bottom());
      const bool second = hex.FindGroup(s, hex.left()) == hex.FindGroup(s, hex.right());
      EXPECT_NE(first, second);
    }
  }
}

TEST(HexTest, EncodingHasFilledBorders) {
  Hex hex(3, false);
  GameState s = hex.InitialState();
  auto planes = hex.EncodePlanes(s);
  ASSERT_EQ(hex.EncodingShape(), (PlaneShape{3, 5, 5}));
  ASSERT_EQ(planes.size(), 75u);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(planes[0 * 5 + k], 1.0f);
    EXPECT_EQ(planes[4 * 5 + k], 1.0f);
    EXPECT_EQ(planes[25 + k * 5 + 0], 1.0f);
    EXPECT_EQ(planes[25 + k * 5 + 4], 1.0f);
  }
  float first_total = 0;
  for (int i = 0; i < 25; ++i) first_total += planes[i];
  EXPECT_EQ(first_total, 6.0f);
}

TEST(HexTest, PlacementChangesExactlyOneEncodedCell) {
  Hex hex(4, false);
  std::mt19937_64 rng(3);
  GameState s = hex.InitialState();
  while (!s.terminal()) {
    auto before = hex.EncodePlanes(s);
    auto actions = hex.LegalActions(s);
    GameState next = hex.Apply(s, actions[rng() % actions.size()]);
    auto after = hex.EncodePlanes(next);
    const int area = 36;
    int changed = 0;
    for (int i = 0; i < 2 * area; ++i) changed += before[i] != after[i];
    EXPECT_EQ(changed, 1);
    s = next;
  }
}

TEST(HexTest, EncodingCommutesWithRotation) {
  std::mt19937_64 rng(11);
  Hex hex(5, false);
  const int w = 7;
  for (int trial = 0; trial < 50; ++trial) {
    GameState s = hex.InitialState();
    const int plies = static_cast<int>(rng() % 12);
    for (int i = 0; i < plies && !s.terminal(); ++i) {
      auto actions = hex.LegalActions(s);
      s = hex.Apply(s, actions[rng() % actions.size()]);
    }
    auto plain = hex.EncodePlanes(s);
    auto rotated = hex.EncodePlanes(hex.Transform(s, 1));
    for (int p = 0; p < 3; ++p) {
      for (int i = 0; i < w * w; ++i) {
        ASSERT_EQ(rotated[p * w * w + i], plain[p * w * w + (w * w - 1 - i)]);
      }
    }
  }
}

TEST(HexTest, SymmetryAddsRotatedStone) {
  Hex hex(3, false);
  GameState s = hex.Apply(hex.InitialState(), 0);
  auto images = hex.Symmetries(s);
  ASSERT_EQ(images.size(), 2u);
  EXPECT_EQ(images[1].cells[8], kFirstStone);
  EXPECT_EQ(images[1].cells[0], kEmpty);
  GameState centre = hex.Apply(hex.InitialState(), 4);
  EXPECT_EQ(hex.Symmetries(centre).size(), 1u);
}

TEST(TicTacToeTest, CentreMove) {
  TicTacToe ttt;
  GameState s = ttt.Apply(ttt.InitialState(), 4);
  EXPECT_EQ(s.ply, 1);
  EXPECT_EQ(s.to_move, Player::kSecond);
  EXPECT_EQ(std::count(s.cells.begin(), s.cells.end(), kFirstStone), 1);
  EXPECT_EQ(ttt.Serialize(s), "tictactoe 3 .../.x./... 2 1");
}

TEST(TicTacToeTest, FullBoardWithoutLineIsDraw) {
  TicTacToe ttt;
  GameState s = ttt.Deserialize("tictactoe 3 xox/xoo/oxx 2 9");
  ASSERT_TRUE(s.terminal());
  EXPECT_EQ(ttt.Gain(s), 0);
}

TEST(TicTacToeTest, ApplyLeavesOriginalUntouched) {
  TicTacToe ttt;
  GameState s = ttt.InitialState();
  GameState copy = s;
  (void)ttt.Apply(s, 0);
  EXPECT_EQ(s, copy);
  EXPECT_EQ(s.key, copy.key);
}

// Exhaustive: every reachable position, distinct positions have distinct
// keys, and every symmetric image keeps terminality and gain.
TEST(TicTacToeTest, ExhaustiveKeysAndSymmetries) {
  TicTacToe ttt;
  std::unordered_map<StateKey, std::string> seen;
  std::vector<GameState> stack = {ttt.InitialState()};
  while (!stack.empty()) {
    GameState s = stack.back();
    stack.pop_back();
    const std::string repr = ttt.Serialize(s);
    auto [it, inserted] = seen.emplace(s.key, repr);
    if (!inserted) {
      ASSERT_EQ(it->second, repr) << "hash collision";
      continue;
    }
    for (const GameState& image : ttt.Symmetries(s)) {
      ASSERT_EQ(image.terminal(), s.terminal());
      if (s.terminal()) {
        ASSERT_EQ(ttt.Gain(image), ttt.Gain(s));
      }
    }
    if (s.terminal()) continue;
    for (Action a : ttt.LegalActions(s)) stack.push_back(ttt.Apply(s, a));
  }
  EXPECT_EQ(seen.size(), 5478u);
}

TEST(OthelloTest, FourByFourOpeningHasFourPlacements) {
  Othello othello(4);
  // Black (first) holds b3/c2, white holds b2/c3; black may play b1, a2,
  // d3 or c4: cells 1, 4, 11, 14 in row-major order.
  auto actions = othello.LegalActions(othello.InitialState());
  EXPECT_EQ(actions, (std::vector<Action>{1, 4, 11, 14}));
}

TEST(OthelloTest, ScoreIsPieceDifference) {
  Othello othello(4);
  GameState s = othello.Deserialize("othello 4 xxxx/xxxx/xoxo/oooo 1 12");
  ASSERT_TRUE(s.terminal());
  EXPECT_EQ(othello.Score(s), 4);
  EXPECT_EQ(othello.Gain(s), 1);
  GameState all = othello.Deserialize("othello 4 xxxx/xxxx/xxxx/xxxx 2 12");
  ASSERT_TRUE(all.terminal());
  EXPECT_EQ(othello.Score(all), 16);
  GameState even = othello.Deserialize("othello 4 xxxx/xxxx/oooo/oooo 1 12");
  ASSERT_TRUE(even.terminal());
  EXPECT_EQ(othello.Score(even), 0);
  EXPECT_EQ(othello.Gain(even), 0);
}

TEST(OthelloTest, PassOnlyWhenNoPlacement) {
  Othello othello(4);
  // White to move has no placement but black can still play c1.
  GameState s = othello.Deserialize("othello 4 xo../..../..../.... 2 2");
  ASSERT_FALSE(s.terminal());
  auto actions = othello.LegalActions(s);
  ASSERT_EQ(actions.size(), 1u);
  EXPECT_EQ(othello.ActionToString(actions[0]), "pass");
}

TEST(OthelloTest, PlacementFlipsLine) {
  Othello othello(4);
  GameState s = othello.Apply(othello.InitialState(), 1);
  EXPECT_EQ(othello.PieceCount(s, Player::kFirst), 4);
  EXPECT_EQ(othello.PieceCount(s, Player::kSecond), 1);
  EXPECT_EQ(s.key, othello.ComputeKey(s));
}

TEST(BreakthroughTest, ReachingLastRankWins) {
  Breakthrough bt(5);
  GameState s = bt.Deserialize("breakthrough 5 xxxxx/xxx../...../ooox./oooo. 1 6");
  ASSERT_FALSE(s.terminal());
  GameState run = bt.Apply(s, bt.ParseAction(s, "d4-e5"));
  ASSERT_TRUE(run.terminal());
  EXPECT_EQ(bt.Gain(run), 1);
  GameState capture = bt.Apply(s, bt.ParseAction(s, "d4-c5"));
  ASSERT_TRUE(capture.terminal());
  EXPECT_EQ(bt.PieceCount(capture, Player::kSecond), 6);
  EXPECT_THROW(bt.ParseAction(s, "d4-d5"), IllegalAction);
}

TEST(BreakthroughTest, PieceOnFarRowIsTerminal) {
  Breakthrough bt(5);
  GameState s = bt.Deserialize("breakthrough 5 xxxxx/xxx../...../o.o.o/ooxoo 2 9");
  ASSERT_TRUE(s.terminal());
  EXPECT_EQ(bt.Gain(s), 1);
}

TEST(BreakthroughTest, OpeningMoves) {
  Breakthrough bt(5);
  GameState s = bt.InitialState();
  // Second-row pieces: edge pieces have 2 moves, inner ones 3.
  EXPECT_EQ(bt.LegalActions(s).size(), 13u);
  GameState next = bt.Apply(s, bt.ParseAction(s, "a2-a3"));
  // a4 can no longer step straight onto a3.
  EXPECT_EQ(bt.LegalActions(next).size(), 12u);
}

TEST(ClobberTest, CaptureReplacesEnemyPiece) {
  Clobber clobber(4);
  GameState s = clobber.InitialState();
  auto actions = clobber.LegalActions(s);
  ASSERT_FALSE(actions.empty());
  for (Action a : actions) {
    GameState next = clobber.Apply(s, a);
    const int from = a / 4;
    const int to = clobber.Target(a);
    EXPECT_EQ(next.cells[from], kEmpty);
    EXPECT_EQ(next.cells[to], kFirstStone);
    EXPECT_EQ(s.cells[to], kSecondStone);
    EXPECT_EQ(clobber.PieceCount(next, Player::kSecond), 7);
    EXPECT_EQ(clobber.PieceCount(next, Player::kFirst), 8);
  }
}

TEST(ClobberTest, PlayerWithoutCaptureLoses) {
  Clobber clobber(4);
  GameState s = clobber.Deserialize("clobber 4 x.o./..../..../.... 2 10");
  ASSERT_TRUE(s.terminal());
  EXPECT_EQ(clobber.Gain(s), 1);
}

TEST(GameTest, ContractViolations) {
  TicTacToe ttt;
  GameState done = ttt.Deserialize("tictactoe 3 xxx/oo./... 2 5");
  EXPECT_THROW(ttt.LegalActions(done), ContractViolation);
  EXPECT_THROW(ttt.Gain(ttt.InitialState()), ContractViolation);
  GameState s = ttt.Apply(ttt.InitialState(), 0);
  try {
    ttt.Apply(s, 0);
    FAIL() << "expected IllegalAction";
  } catch (const IllegalAction& e) {
    EXPECT_NE(std::string(e.what()).find(std::to_string(s.key)), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("a1"), std::string::npos);
  }
  Hex hex(3, false);
  GameState end = hex.Deserialize("hex 3 x../x../x.o 2 5");
  EXPECT_THROW(hex.Score(end), UnsupportedFeature);
}

TEST(GameTest, MakeGameRejectsUnsupportedSizes) {
  EXPECT_THROW(MakeGame({GameKind::kHex, 2, false}), std::invalid_argument);
  EXPECT_THROW(MakeGame({GameKind::kOthello, 5, false}), std::invalid_argument);
  EXPECT_THROW(MakeGame({GameKind::kBreakthrough, 9, false}), std::invalid_argument);
  EXPECT_THROW(MakeGame({GameKind::kOthello, 6, true}), std::invalid_argument);
  EXPECT_NO_THROW(MakeGame({GameKind::kHex, 13, true}));
}

// Random playout fuzzing: ply bookkeeping, incremental keys, determinism of
// the action list, serialization round trip, symmetric images agreeing on
// terminality.
TEST(GameTest, RandomPlayoutInvariants) {
  for (const GameConfig& config : AllGameConfigs()) {
    auto game = MakeGame(config);
    std::mt19937_64 rng(1234);
    int plies = 0;
    while (plies < 10000) {
      GameState s = game->InitialState();
      while (!s.terminal()) {
        auto actions = game->LegalActions(s);
        ASSERT_FALSE(actions.empty());
        ASSERT_EQ(actions, game->LegalActions(s));
        GameState next = game->Apply(s, actions[rng() % actions.size()]);
        ASSERT_EQ(next.ply, s.ply + 1);
        ASSERT_EQ(next.to_move, Opponent(s.to_move));
        ASSERT_EQ(next.key, game->ComputeKey(next)) << game->Describe();
        GameState parsed = game->Deserialize(game->Serialize(next));
        ASSERT_EQ(parsed, next);
        ASSERT_EQ(parsed.key, next.key);
        for (const GameState& image : game->Symmetries(next)) {
          ASSERT_EQ(image.terminal(), next.terminal());
          if (next.terminal()) {
            ASSERT_EQ(image.outcome, next.outcome);
          }
        }
        s = next;
        ++plies;
      }
      ASSERT_NE(s.outcome, kOngoing);
      if (config.kind == GameKind::kHex) {
        ASSERT_NE(s.outcome, 0);
      }
    }
  }
}

TEST(GameTest, ActionNotationRoundTrips) {
  for (const GameConfig& config : AllGameConfigs()) {
    auto game = MakeGame(config);
    std::mt19937_64 rng(99);
    GameState s = game->InitialState();
    while (!s.terminal()) {
      for (Action a : game->LegalActions(s)) {
        ASSERT_EQ(game->ParseAction(s, game->ActionToString(a)), a);
      }
      auto actions = game->LegalActions(s);
      s = game->Apply(s, actions[rng() % actions.size()]);
    }
  }
}

TEST(GameTest, ApproximateLengthsMatchEstimator) {
  for (auto [kind, size] : std::vector<std::pair<GameKind, int>>{
           {GameKind::kOthello, 4}, {GameKind::kOthello, 6},
           {GameKind::kBreakthrough, 5}, {GameKind::kBreakthrough, 6},
           {GameKind::kClobber, 4}, {GameKind::kClobber, 5},
           {GameKind::kClobber, 6}}) {
    auto game = MakeGame({kind, size, false});
    EXPECT_NEAR(ApproximateGameLength(kind, size),
                EstimateMeanGameLength(*game, 1000, 2021), 0.005)
        << game->Describe();
  }
}

TEST(GameTest, MaxActionsForHexCountsSwap) {
  EXPECT_EQ(Hex(5, false).MaxActions(), 25.0);
  EXPECT_EQ(Hex(5, true).MaxActions(), 26.0);
}

}  // namespace
}  // namespace descent
