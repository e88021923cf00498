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

#include "verify.h"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <unordered_map>

#include "descent/eval/evaluator.h"
#include "descent/eval/terminal_eval.h"
#include "descent/game/game.h"
#include "descent/harness/match.h"
#include "descent/harness/tournament.h"
#include "descent/learning/policy.h"
#include "descent/nnet/architecture.h"
#include "descent/nnet/network.h"
#include "descent/search/search.h"

namespace descent::tools {
namespace {

std::string Format(const char* fmt, double a, double b = 0) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

Check Report(std::ostream& out, std::string name, bool passed, std::string detail) {
  out << (passed ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : "  " + detail) << '\n';
  return {std::move(name), passed, std::move(detail)};
}

// Exhaustive minimax with a transposition memo; first player's view.
class BruteForce {
 public:
  explicit BruteForce(const Game& game) : game_(game) {}
  int Value(const GameState& s) {
    if (s.terminal()) return game_.Gain(s);
    if (auto it = memo_.find(s.key); it != memo_.end()) return it->second;
    const int sign = Sign(s.to_move);
    int best = -2;
    for (Action a : game_.LegalActions(s)) {
      best = std::max(best, sign * Value(game_.Apply(s, a)));
      if (best == 1) break;
    }
    return memo_[s.key] = sign * best;
  }

 private:
  const Game& game_;
  std::unordered_map<StateKey, int> memo_;
};

// Values strictly inside (-1, 1) that vary from state to state.
std::unique_ptr<Evaluator> Hashed(uint64_t salt) {
  return std::make_unique<FunctionEvaluator>([salt](const GameState& s) {
    uint64_t x = (s.key ^ salt) * 0x9e3779b97f4a7c15ULL;
    x ^= x >> 29;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 32;
    return (static_cast<double>(x >> 11) / 9007199254740992.0) * 1.8 - 0.9;
  });
}

const GameConfig kSmallGames[] = {{GameKind::kTicTacToe, 3, false}, {GameKind::kHex, 3, false}};

}  // namespace

std::vector<Check> VerifyOracle(const VerifyOptions& opt, std::ostream& out) {
  std::vector<Check> checks;
  for (const GameConfig& cfg : kSmallGames) {
    auto game = MakeGame(cfg);
    TerminalEval f_t(*game, HeuristicKind::kClassic);
    BruteForce oracle(*game);
    const GameState root = game->InitialState();
    const int truth = oracle.Value(root);
    auto f = Hashed(opt.seed);
    for (Algorithm algo : {Algorithm::kUbfm, Algorithm::kDescent, Algorithm::kCompletedDescent,
                           Algorithm::kAlphaBeta}) {
      SearchOptions so;
      so.algorithm = algo;
      so.budget = Budget::Iterations(1000000);
      Searcher searcher(*game, *f, f_t, so);
      SearchTable table;
      const SearchResult r = searcher.Search(root, MobilityTally{}, table);
      const int after = oracle.Value(game->Apply(root, r.action));
      const bool ok = r.value == truth && after == truth;
      checks.push_back(Report(out, game->Describe() + " " + AlgorithmName(algo),
                              ok, Format("value %g (minimax %g)", r.value, truth)));
    }
  }
  return checks;
}

std::vector<Check> VerifyGradcheck(const VerifyOptions& opt, std::ostream& out) {
  std::vector<Check> checks;
  for (GameKind kind : {GameKind::kTicTacToe, GameKind::kHex, GameKind::kOthello,
                        GameKind::kBreakthrough, GameKind::kClobber}) {
    const int size = kind == GameKind::kTicTacToe ? 3 : (kind == GameKind::kOthello ? 6 : 5);
    auto game = MakeGame({kind, size, false});
    const PlaneShape shape = game->EncodingShape();
    for (bool tanh : {false, true}) {
      for (const nnet::Architecture& arch :
           {nnet::Architecture::Desk(shape, tanh), nnet::Architecture::Large(shape, tanh)}) {
        nnet::Network net(arch, nnet::Init::kHeUniform, opt.seed);
        std::mt19937_64 rng(opt.seed);
        std::uniform_real_distribution<float> u(-1, 1);
        const int batch = 2;
        std::vector<float> x(static_cast<size_t>(shape.size()) * batch);
        for (float& v : x) v = u(rng);
        std::vector<float> y = {0.3f, -0.6f};
        const nnet::GradCheckResult r = nnet::GradCheck(net, x, y, batch, 0.001, opt.seed);
        checks.push_back(Report(out, arch.Describe(), r.max_relative_error < 1e-4,
                                Format("max relative error %.3g over %g parameters",
                                       r.max_relative_error, r.checked)));
      }
    }
  }
  return checks;
}

std::vector<Check> VerifyDistributions(const VerifyOptions& opt, std::ostream& out) {
  std::vector<Check> checks;
  const int draws = opt.draws;
  int cell = 0;
  int comparisons = 0;
  for (int n : {2, 3, 5}) {
    std::vector<double> values;
    for (int i = 0; i < n; ++i) values.push_back(1.0 - 0.5 * i);
    for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (PolicyKind kind : {PolicyKind::kEpsilonGreedy, PolicyKind::kSoftmax, PolicyKind::kOrdinal}) {
        std::vector<double> p(n);
        double temperature = 0.25 + eps;
        if (kind == PolicyKind::kEpsilonGreedy) {
          for (int i = 0; i < n; ++i) p[i] = (1 - eps) / n + (i == 0 ? eps : 0);
        } else if (kind == PolicyKind::kOrdinal) {
          double rest = 1;
          for (int i = 0; i < n; ++i) rest -= p[i] = (eps + (1 - eps) / (n - i)) * rest;
        } else {
          for (int i = 0; i < n; ++i) p[i] = std::exp(values[i] / temperature);
          const double z = std::accumulate(p.begin(), p.end(), 0.0);
          for (double& x : p) x /= z;
        }
        // One independent stream per cell.
        Rng rng(DeriveSeed(opt.seed, static_cast<uint64_t>(cell++)));
        std::vector<int> counts(n);
        for (int d = 0; d < draws; ++d) {
          size_t i;
          switch (kind) {
            case PolicyKind::kEpsilonGreedy:
              i = SelectEpsilonGreedy(values, Player::kFirst, eps, rng);
              break;
            case PolicyKind::kSoftmax:
              i = SelectSoftmax(values, Player::kFirst, temperature, rng);
              break;
            default:
              i = SelectOrdinal(values, Player::kFirst, eps, rng);
          }
          ++counts[i];
        }
        bool ok = true;
        double chi2 = 0;
        int df = -1;
        for (int i = 0; i < n; ++i) {
          const double f = static_cast<double>(counts[i]) / draws;
          ok &= std::abs(f - p[i]) <= 3 * std::sqrt(p[i] * (1 - p[i]) / draws) + 1e-12;
          comparisons += p[i] > 0 && p[i] < 1;
          if (p[i] > 0) {
            chi2 += std::pow(counts[i] - draws * p[i], 2) / (draws * p[i]);
            ++df;
          }
        }
        char name[96];
        std::snprintf(name, sizeof(name), "%s n=%d %s=%.2f", PolicyName(kind).c_str(), n,
                      kind == PolicyKind::kSoftmax ? "T" : "eps", kind == PolicyKind::kSoftmax ? temperature : eps);
        checks.push_back(Report(out, name, ok, Format("chi2 %.3f df %g", chi2, std::max(df, 0))));
      }
    }
  }
  // Each 3-sigma comparison fails by chance with probability about 0.0027.
  out << comparisons << " random comparisons; chance of at least one 3-sigma miss under a correct "
      << "sampler is about " << Format("%.0f%%", 100 * (1 - std::pow(1 - 0.0027, comparisons)))
      << '\n';
  return checks;
}

std::vector<Check> VerifyCompletion(const VerifyOptions& opt, std::ostream& out) {
  std::vector<Check> checks;
  for (const GameConfig& cfg : kSmallGames) {
    auto game = MakeGame(cfg);
    TerminalEval f_t(*game, HeuristicKind::kClassic);
    BruteForce oracle(*game);
    auto f = Hashed(opt.seed);
    SearchOptions so;
    so.algorithm = Algorithm::kCompletedDescent;
    so.budget = Budget::Iterations(1000000);
    {
      Searcher searcher(*game, *f, f_t, so);
      SearchTable table;
      const SearchResult r = searcher.Search(game->InitialState(), MobilityTally{}, table);
      const int truth = oracle.Value(game->InitialState());
      checks.push_back(Report(out, game->Describe() + " root resolved", r.resolved && r.r == truth,
                              Format("r %g (minimax %g)", r.r, truth)));
    }
    // The engine's own resolution claims are checked game by game.
    class Watched : public Agent {
     public:
      Watched(SearchAgent& inner) : inner_(inner) {}
      void NewGame() override {
        inner_.NewGame();
        claim = -2;
      }
      Action Act(const GameState& s, const MobilityTally& t, MatchRng& rng) override {
        const Action a = inner_.Act(s, t, rng);
        if (inner_.last().resolved) claim = std::max(claim, Sign(s.to_move) * inner_.last().r);
        return a;
      }
      std::string Name() const override { return inner_.Name(); }
      int claim = -2;  // best resolved outcome seen, engine's view

     private:
      SearchAgent& inner_;
    };
    SearchAgent engine(*game, *f, f_t, so, "completed_descent", true);
    Watched watched(engine);
    RandomAgent random(*game);
    OptimalAgent optimal(*game);
    for (Agent* opponent : std::initializer_list<Agent*>{&random, &optimal}) {
      int broken = 0, losses = 0, won_claims = 0;
      for (int g = 0; g < opt.games; ++g) {
        const bool first = g % 2 == 0;
        const MatchRecord m = first ? PlayMatch(watched, *opponent, *game, opt.seed + g)
                                    : PlayMatch(*opponent, watched, *game, opt.seed + g);
        const int engine_result = first ? m.result : -m.result;
        if (engine_result < 0) ++losses;
        if (watched.claim == 1) ++won_claims;
        if (engine_result < watched.claim) ++broken;
      }
      char detail[128];
      std::snprintf(detail, sizeof(detail), "%d games, %d from resolved wins, %d losses, %d broken claims",
                    opt.games, won_claims, losses, broken);
      checks.push_back(Report(out, game->Describe() + " vs " + opponent->Name(), broken == 0, detail));
    }
  }
  return checks;
}

}  // namespace descent::tools
