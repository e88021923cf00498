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

#include <cmath>
#include <filesystem>
#include <map>
#include <numeric>

#include "descent/learning/config.h"
#include "descent/learning/episode.h"
#include "descent/learning/policy.h"
#include "descent/learning/replay.h"
#include "descent/learning/trainer.h"
#include "descent/nnet/checkpoint.h"
#include "gtest/gtest.h"

namespace descent {
namespace {

constexpr int kDraws = 10000;

// Closed forms, written out independently of the samplers.
std::vector<double> EpsilonGreedyProbs(int n, double eps) {
  std::vector<double> p(n, (1 - eps) / n);
  p[0] += eps;
  return p;
}

std::vector<double> OrdinalProbs(int n, double eps) {
  std::vector<double> p(n);
  double remaining = 1;
  for (int i = 0; i < n; ++i) {
    p[i] = (eps + (1 - eps) / (n - i)) * remaining;
    remaining -= p[i];
  }
  return p;
}

std::vector<double> SoftmaxProbs(const std::vector<double>& scores, double temperature) {
  std::vector<double> p;
  for (double s : scores) p.push_back(std::exp(s / temperature));
  const double z = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& x : p) x /= z;
  return p;
}

// Values listed best-first for the first player.
std::vector<double> Descending(int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(1.0 - 0.5 * i);
  return v;
}

template <typename Sampler>
std::vector<double> Frequencies(int n, Sampler sample) {
  std::vector<double> counts(n, 0);
  for (int i = 0; i < kDraws; ++i) counts[sample()] += 1;
  for (double& c : counts) c /= kDraws;
  return counts;
}

void ExpectWithin3Sigma(const std::vector<double>& freq, const std::vector<double>& p,
                        const std::string& label) {
  ASSERT_EQ(freq.size(), p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    const double sigma = std::sqrt(p[i] * (1 - p[i]) / kDraws);
    EXPECT_LE(std::abs(freq[i] - p[i]), 3 * sigma + 1e-12) << label << " rank " << i;
  }
}

TEST(PolicyTest, GridMatchesClosedForms) {
  Rng rng(1);
  for (int n : {2, 3, 5}) {
    const std::vector<double> values = Descending(n);
    for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const std::string label = "n=" + std::to_string(n) + " eps=" + std::to_string(eps);
      ExpectWithin3Sigma(Frequencies(n, [&] { return SelectEpsilonGreedy(values, Player::kFirst, eps, rng); }),
                         EpsilonGreedyProbs(n, eps), "greedy " + label);
      ExpectWithin3Sigma(Frequencies(n, [&] { return SelectOrdinal(values, Player::kFirst, eps, rng); }),
                         OrdinalProbs(n, eps), "ordinal " + label);
      // Softmax has no annealing ratio; map the grid onto temperatures.
      const double temperature = 0.25 + eps;
      ExpectWithin3Sigma(Frequencies(n, [&] { return SelectSoftmax(values, Player::kFirst, temperature, rng); }),
                         SoftmaxProbs(values, temperature), "softmax " + label);
    }
  }
}

TEST(PolicyTest, OrdinalExactPoints) {
  const auto p = OrdinalProbs(3, 0.5);
  EXPECT_DOUBLE_EQ(p[0], 2.0 / 3);
  EXPECT_DOUBLE_EQ(p[1], 1.0 / 4);
  EXPECT_NEAR(p[2], 1.0 / 12, 1e-15);
  Rng rng(2);
  const auto v = Descending(3);
  ExpectWithin3Sigma(Frequencies(3, [&] { return SelectOrdinal(v, Player::kFirst, 0.5, rng); }),
                     {2.0 / 3, 1.0 / 4, 1.0 / 12}, "ordinal exact");
  for (int n : {2, 3, 5}) {
    const auto u = OrdinalProbs(n, 0.0);
    for (double x : u) EXPECT_NEAR(x, 1.0 / n, 1e-15);
  }
}

TEST(PolicyTest, OrdinalNonIncreasingAndNormalized) {
  for (int n : {2, 3, 5}) {
    for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const auto p = OrdinalProbs(n, eps);
      EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
      for (int i = 1; i < n; ++i) EXPECT_LE(p[i], p[i - 1] + 1e-15);
    }
  }
}

TEST(PolicyTest, OrdinalDependsOnRankOnly) {
  const std::vector<double> values = {0.1, -0.4, 0.3, 0.25, -0.9};
  std::vector<double> warped;
  for (double v : values) warped.push_back(std::exp(3 * v) - 7);
  for (Player p : {Player::kFirst, Player::kSecond}) {
    Rng a(5), b(5);
    for (int i = 0; i < 2000; ++i) {
      ASSERT_EQ(SelectOrdinal(values, p, 0.3, a), SelectOrdinal(warped, p, 0.3, b));
    }
  }
}

TEST(PolicyTest, EpsilonGreedyEdges) {
  Rng rng(3);
  const std::vector<double> values = {0.2, 0.7, -0.1};
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(SelectEpsilonGreedy(values, Player::kFirst, 1.0, rng), 1u);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(SelectEpsilonGreedy(values, Player::kSecond, 1.0, rng), 2u);
  // Uniform at eps = 0: chi-square with 2 degrees of freedom, 0.999 quantile.
  const auto freq = Frequencies(3, [&] { return SelectEpsilonGreedy(values, Player::kFirst, 0.0, rng); });
  double chi2 = 0;
  for (double f : freq) chi2 += std::pow(f * kDraws - kDraws / 3.0, 2) / (kDraws / 3.0);
  EXPECT_LT(chi2, 13.82);
  const std::vector<double> two = {0.0, 1.0};
  const auto half = Frequencies(2, [&] { return SelectEpsilonGreedy(two, Player::kFirst, 0.5, rng); });
  EXPECT_NEAR(half[1], 0.75, 0.02);
}

TEST(PolicyTest, SoftmaxCases) {
  Rng rng(4);
  const std::vector<double> equal = {0.3, 0.3, 0.3, 0.3};
  ExpectWithin3Sigma(Frequencies(4, [&] { return SelectSoftmax(equal, Player::kFirst, 1.0, rng); }),
                     {0.25, 0.25, 0.25, 0.25}, "equal");
  const std::vector<double> three = {0.1, 0.5, 0.4};
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(SelectSoftmax(three, Player::kFirst, 1e-6, rng), 1u);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(SelectSoftmax(three, Player::kSecond, 1e-6, rng), 0u);
  const std::vector<double> two = {1.0, 0.0};
  const auto f = Frequencies(2, [&] { return SelectSoftmax(two, Player::kFirst, 1.0, rng); });
  EXPECT_NEAR(f[0], std::exp(1.0) / (std::exp(1.0) + 1), 0.02);
  // The minimizing player prefers the lower value.
  const auto g = Frequencies(2, [&] { return SelectSoftmax(two, Player::kSecond, 1.0, rng); });
  EXPECT_NEAR(g[1], std::exp(1.0) / (std::exp(1.0) + 1), 0.02);
  // Large magnitudes stay finite.
  const std::vector<double> big = {1000.0, 999.0};
  EXPECT_NO_THROW(SelectSoftmax(big, Player::kFirst, 0.01, rng));
  EXPECT_THROW(SelectSoftmax(big, Player::kFirst, 0.0, rng), std::invalid_argument);
}

struct FakeRoot {
  SearchTable table;
  NodeRecord* node = nullptr;
  FakeRoot(Player mover, std::vector<std::tuple<int, bool, double>> kids) {
    GameState root;
    root.key = 1000;
    root.to_move = mover;
    node = &table.Insert(root);
    node->expanded = true;
    for (size_t i = 0; i < kids.size(); ++i) {
      GameState child;
      child.key = i + 1;
      NodeRecord& rec = table.Insert(child);
      std::tie(rec.r, rec.resolved, rec.v) = kids[i];
      node->actions.push_back(static_cast<Action>(i));
      node->children.push_back(child.key);
      node->n.push_back(0);
      node->n_base.push_back(0);
    }
  }
};

TEST(CompletedSelectionTest, PlaysResolvedWin) {
  FakeRoot t(Player::kFirst, {{0, false, 0.9}, {1, true, 0.2}, {0, false, 0.5}});
  Rng rng(1);
  for (PolicyKind kind : {PolicyKind::kEpsilonGreedy, PolicyKind::kSoftmax, PolicyKind::kOrdinal}) {
    PolicyConfig policy{kind, 1.0, true};
    for (int i = 0; i < 200; ++i) ASSERT_EQ(SelectChild(policy, t.table, *t.node, 0.0, rng), 1u);
  }
}

TEST(CompletedSelectionTest, AvoidsResolvedLoss) {
  FakeRoot t(Player::kFirst, {{-1, true, 0.9}, {0, false, -0.5}});
  Rng rng(2);
  PolicyConfig policy{PolicyKind::kEpsilonGreedy, 1.0, true};
  for (int i = 0; i < 200; ++i) ASSERT_EQ(SelectChild(policy, t.table, *t.node, 0.0, rng), 1u);
  // Without the wrapper both children occur.
  policy.completed = false;
  std::set<size_t> seen;
  for (int i = 0; i < 200; ++i) seen.insert(SelectChild(policy, t.table, *t.node, 0.0, rng));
  EXPECT_EQ(seen.size(), 2u);
}

TEST(CompletedSelectionTest, AllLostFallsBack) {
  FakeRoot t(Player::kSecond, {{1, true, 0.9}, {1, true, 0.5}, {1, true, 0.7}});
  Rng rng(3);
  PolicyConfig policy{PolicyKind::kOrdinal, 1.0, true};
  std::set<size_t> seen;
  for (int i = 0; i < 300; ++i) seen.insert(SelectChild(policy, t.table, *t.node, 0.0, rng));
  EXPECT_EQ(seen.size(), 3u);
  EXPECT_EQ(SelectChild(policy, t.table, *t.node, 1.0, rng), 1u);
}

std::vector<LabeledState> Tagged(int from, int count) {
  std::vector<LabeledState> out;
  for (int i = 0; i < count; ++i) {
    LabeledState d;
    d.state.key = static_cast<StateKey>(from + i);
    d.value = from + i;
    out.push_back(d);
  }
  return out;
}

TEST(ReplayTest, CapacityAndEviction) {
  ReplayBuffer buffer(10, 1.0);
  buffer.Push(Tagged(0, 15));
  ASSERT_EQ(buffer.pairs(), 10u);
  for (size_t i = 0; i < 10; ++i) EXPECT_EQ(buffer.contents()[i].value, 5 + i);
}

TEST(ReplayTest, ReturnAllBelowThreshold) {
  Rng rng(1);
  ReplayBuffer small(10, 0.5);
  const auto all = small.PushSample(Tagged(0, 4), rng);
  EXPECT_EQ(all.size(), 4u);
  ReplayBuffer full(10, 0.5);
  const auto some = full.PushSample(Tagged(0, 10), rng);
  ASSERT_EQ(some.size(), 5u);
  std::set<double> distinct;
  for (const auto& d : some) distinct.insert(d.value);
  EXPECT_EQ(distinct.size(), 5u);
}

// Straightforward model of the buffer for the exhaustive comparison.
struct ModelBuffer {
  size_t mu;
  double sigma;
  ReplayUnit unit;
  std::vector<std::vector<int>> games;
  std::vector<int> Flat() const {
    std::vector<int> out;
    for (const auto& g : games) out.insert(out.end(), g.begin(), g.end());
    return out;
  }
  void Push(std::vector<int> g) {
    games.push_back(std::move(g));
    if (unit == ReplayUnit::kGames) {
      while (games.size() > mu) games.erase(games.begin());
    } else {
      std::vector<int> flat = Flat();
      const size_t drop = flat.size() > mu ? flat.size() - mu : 0;
      size_t dropped = 0;
      while (dropped < drop) {
        const size_t k = std::min(drop - dropped, games.front().size());
        games.front().erase(games.front().begin(), games.front().begin() + k);
        dropped += k;
        if (games.front().empty() && dropped < drop) games.erase(games.begin());
      }
    }
  }
  size_t ExpectedSample() const {
    const size_t m = Flat().size();
    const double t = sigma * mu;
    if (unit == ReplayUnit::kPairs) return m <= t ? m : static_cast<size_t>(std::floor(t));
    return games.size() <= t ? m : static_cast<size_t>(std::floor(t / games.size() * m));
  }
};

TEST(ReplayTest, ExhaustiveSmallBuffers) {
  Rng rng(9);
  for (ReplayUnit unit : {ReplayUnit::kPairs, ReplayUnit::kGames}) {
    for (size_t mu = 1; mu <= 6; ++mu) {
      for (double sigma : {0.2, 0.5, 1.0}) {
        // All push sequences of four games with sizes 0..3.
        for (int code = 0; code < 256; ++code) {
          ReplayBuffer buffer(mu, sigma, unit);
          ModelBuffer model{mu, sigma, unit, {}};
          int tag = 0;
          for (int g = 0; g < 4; ++g) {
            const int size = (code >> (2 * g)) & 3;
            std::vector<int> tags(size);
            std::iota(tags.begin(), tags.end(), tag);
            buffer.Push(Tagged(tag, size));
            model.Push(tags);
            tag += size;
            const std::vector<int> expected = model.Flat();
            ASSERT_EQ(buffer.pairs(), expected.size());
            if (unit == ReplayUnit::kPairs) {
              ASSERT_LE(buffer.pairs(), mu);
            }
            for (size_t i = 0; i < expected.size(); ++i) {
              ASSERT_EQ(buffer.contents()[i].value, expected[i]);
            }
            const auto sample = buffer.Sample(rng);
            ASSERT_EQ(sample.size(), model.ExpectedSample())
                << "mu=" << mu << " sigma=" << sigma << " code=" << code;
            std::set<double> distinct;
            for (const auto& d : sample) distinct.insert(d.value);
            ASSERT_EQ(distinct.size(), sample.size());
          }
        }
      }
    }
  }
}

TEST(ReplayTest, RejectsBadParameters) {
  EXPECT_THROW(ReplayBuffer(0, 0.5), std::invalid_argument);
  EXPECT_THROW(ReplayBuffer(10, 0.0), std::invalid_argument);
  EXPECT_THROW(ReplayBuffer(10, 1.5), std::invalid_argument);
}

struct Rig {
  std::unique_ptr<Game> game;
  std::unique_ptr<Evaluator> f;
  std::unique_ptr<TerminalEval> ft;
  std::unique_ptr<Searcher> searcher;

  Rig(GameConfig cfg, Algorithm algo, int64_t iterations, HeuristicKind h = HeuristicKind::kClassic) {
    game = MakeGame(cfg);
    f = std::make_unique<TableEvaluator>();
    ft = std::make_unique<TerminalEval>(*game, h);
    SearchOptions opt;
    opt.algorithm = algo;
    opt.budget = Budget::Iterations(iterations);
    searcher = std::make_unique<Searcher>(*game, *f, *ft, opt);
  }
  Episode Run(DataMode mode, uint64_t seed, PolicyConfig policy = {}, int cap = 1000) {
    Rng rng(seed);
    return RunEpisode({*game, *searcher, *ft, mode, policy, cap}, 0.5, rng);
  }
};

TEST(EpisodeTest, TerminalModeUsesFinalValue) {
  Rig rig({GameKind::kHex, 4}, Algorithm::kDescent, 20, HeuristicKind::kDepthAdditive);
  const Episode ep = rig.Run(DataMode::kTerminal, 1);
  ASSERT_FALSE(ep.aborted);
  ASSERT_EQ(ep.data.size(), ep.trajectory.size());
  const double final_value = (*rig.ft)(ep.trajectory.back(), ep.tally);
  EXPECT_NE(final_value, 0.0);
  for (const auto& d : ep.data) EXPECT_EQ(d.value, final_value);
}

TEST(EpisodeTest, RootModeCoversTrajectory) {
  Rig rig({GameKind::kTicTacToe, 3}, Algorithm::kUbfm, 30);
  const Episode ep = rig.Run(DataMode::kRoot, 2);
  EXPECT_EQ(ep.data.size(), ep.actions.size() + 1);
  EXPECT_EQ(ep.data.back().state, ep.trajectory.back());
  EXPECT_EQ(ep.data.back().value, (*rig.ft)(ep.trajectory.back(), ep.tally));
}

TEST(EpisodeTest, TreeModeContainsRootTrajectoryAndTrueValue) {
  for (uint64_t seed : {3, 4, 5}) {
    Rig tree_rig({GameKind::kTicTacToe, 3}, Algorithm::kCompletedDescent, 1000000);
    Rig root_rig({GameKind::kTicTacToe, 3}, Algorithm::kCompletedDescent, 1000000);
    const Episode tree = tree_rig.Run(DataMode::kTree, seed);
    const Episode root = root_rig.Run(DataMode::kRoot, seed);
    ASSERT_EQ(tree.actions, root.actions);
    std::map<StateKey, double> tree_values;
    for (const auto& d : tree.data) tree_values[d.state.key] = d.value;
    EXPECT_GT(tree.data.size(), root.data.size());
    for (const auto& d : root.data) EXPECT_TRUE(tree_values.count(d.state.key));
    EXPECT_EQ(tree_values.at(tree_rig.game->InitialState().key), 0.0);
  }
}

TEST(EpisodeTest, PlyCapAborts) {
  Rig rig({GameKind::kHex, 5}, Algorithm::kUbfm, 5);
  const Episode ep = rig.Run(DataMode::kTree, 1, {}, 4);
  EXPECT_TRUE(ep.aborted);
  EXPECT_TRUE(ep.data.empty());
  EXPECT_EQ(ep.actions.size(), 4u);
}

TEST(EpisodeTest, SameSeedSameEpisode) {
  Rig a({GameKind::kHex, 4}, Algorithm::kDescent, 30);
  Rig b({GameKind::kHex, 4}, Algorithm::kDescent, 30);
  const Episode x = a.Run(DataMode::kTree, 7), y = b.Run(DataMode::kTree, 7);
  EXPECT_EQ(x.actions, y.actions);
  ASSERT_EQ(x.data.size(), y.data.size());
  for (size_t i = 0; i < x.data.size(); ++i) {
    EXPECT_EQ(x.data[i].state.key, y.data[i].state.key);
    EXPECT_EQ(x.data[i].value, y.data[i].value);
  }
}

TEST(AugmentTest, HexAddsRotationsOnce) {
  auto game = MakeGame({GameKind::kHex, 3});
  GameState corner = game->Apply(game->InitialState(), 0);
  GameState centre = game->Apply(game->InitialState(), 4);
  const auto out = Augment(*game, {{corner, 0.5}, {centre, -0.25}});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[1].state.cells[8], kFirstStone);
  EXPECT_EQ(out[1].value, 0.5);
  EXPECT_EQ(out[2].value, -0.25);
}

LearningConfig TicTacToeConfig(int64_t episodes) {
  ConfigFile f = ConfigFile::Parse(
      "game = tictactoe\n"
      "search = completed_descent\n"
      "budget = 200\n"
      "evaluator = network\n"
      "architecture = in3x3x3 dense16 relu dense1 tanh\n"
      "batch_size = 16\n"
      "replay_sigma = 0.01\n"
      "checkpoint_every = 5\n"
      "seed = 42\n"
      "episodes = " + std::to_string(episodes) + "\n");
  return LearningConfig::FromFile(f);
}

TEST(ConfigTest, ParsesAndEchoes) {
  const LearningConfig c = TicTacToeConfig(10);
  EXPECT_EQ(c.game.size, 3);
  EXPECT_EQ(c.search.algorithm, Algorithm::kCompletedDescent);
  EXPECT_EQ(c.batch_size, 16);
  // Echoed text parses back to the same text.
  const std::string text = c.ToText();
  EXPECT_EQ(LearningConfig::FromFile(ConfigFile::Parse(text)).ToText(), text);
}

TEST(ConfigTest, Errors) {
  try {
    LearningConfig::FromFile(ConfigFile::Parse("size = 5\n"));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("'game'"), std::string::npos);
  }
  EXPECT_THROW(LearningConfig::FromFile(ConfigFile::Parse("game = hex\nbogus = 1\n")), ConfigError);
  EXPECT_THROW(LearningConfig::FromFile(ConfigFile::Parse("game = hex\nbudget = x\n")), ConfigError);
  EXPECT_THROW(LearningConfig::FromFile(ConfigFile::Parse("game = hex\npolicy = greedy\n")), ConfigError);
  EXPECT_THROW(ConfigFile::Parse("novalue\n"), ConfigError);
  for (const KeyDoc& k : TrainingKeys()) EXPECT_TRUE(*k.help) << k.key;
}

TEST(TrainerTest, ZeroEpisodesOnlyInitialCheckpoint) {
  const std::string dir = ::testing::TempDir() + "/train0";
  std::filesystem::remove_all(dir);
  Trainer trainer(TicTacToeConfig(0), dir);
  const std::string before = trainer.evaluator().Save();
  const TrainSummary s = trainer.Run();
  ASSERT_EQ(s.checkpoints.size(), 1u);
  EXPECT_EQ(s.checkpoints[0].episode, 0);
  EXPECT_EQ(nnet::ReadFileBytes(s.checkpoints[0].path), before);
  EXPECT_EQ(trainer.evaluator().Save(), before);
  EXPECT_TRUE(std::filesystem::exists(dir + "/config.txt"));
}

TEST(TrainerTest, DeterministicCheckpoints) {
  std::vector<std::string> finals;
  for (int run = 0; run < 2; ++run) {
    const std::string dir = ::testing::TempDir() + "/train" + std::to_string(run);
    std::filesystem::remove_all(dir);
    Trainer trainer(TicTacToeConfig(10), dir);
    const TrainSummary s = trainer.Run();
    ASSERT_EQ(s.checkpoints.size(), 3u);
    EXPECT_EQ(s.checkpoints.back().episode, 10);
    finals.push_back(nnet::ReadFileBytes(s.checkpoints.back().path) +
                     nnet::ReadFileBytes(dir + "/train_log.csv"));
  }
  EXPECT_EQ(finals[0], finals[1]);
}

}  // namespace
}  // namespace descent
