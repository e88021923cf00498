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

// Command-line driver: train, tournament, play, verify, export.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "descent/game/game_lengths.h"
#include "descent/harness/experiment.h"
#include "descent/harness/match.h"
#include "descent/learning/trainer.h"
#include "descent/nnet/checkpoint.h"
#include "json.hpp"
#include "verify.h"

namespace descent {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct Globals {
  std::optional<uint64_t> seed;
  std::string trace_path;
  std::unique_ptr<std::ofstream> trace;

  std::ostream* Trace() {
    if (trace_path.empty()) return nullptr;
    if (!trace) trace = std::make_unique<std::ofstream>(trace_path);
    return trace.get();
  }
};

std::string KeyHelp() {
  std::ostringstream out;
  out << "\nConfig keys (key = value, '#' starts a comment):\n";
  for (const KeyDoc& k : TrainingKeys()) {
    out << "  " << k.key << " [" << (*k.default_value ? k.default_value : "required") << "]  "
        << k.help << '\n';
  }
  out << "Experiment keys (tournament):\n";
  for (const KeyDoc& k : ExperimentKeys()) {
    out << "  " << k.key << " [" << (*k.default_value ? k.default_value : "required") << "]  "
        << k.help << '\n';
  }
  return out.str();
}

ConfigFile LoadWithOverrides(const std::string& path, const std::vector<std::string>& sets) {
  ConfigFile file = path.empty() ? ConfigFile() : ConfigFile::Load(path);
  for (const std::string& s : sets) {
    const size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--set expects key=value, got '" + s + "'");
    file.Set(s.substr(0, eq), s.substr(eq + 1));
  }
  return file;
}

// Train.
struct TrainArgs {
  std::string config;
  std::string out = "descent-train";
  std::vector<std::string> sets;
  std::optional<int64_t> episodes;
};

int CmdTrain(const TrainArgs& args, Globals& g) {
  ConfigFile file = LoadWithOverrides(args.config, args.sets);
  if (args.episodes) file.Set("episodes", std::to_string(*args.episodes));
  if (g.seed) file.Set("seed", std::to_string(*g.seed));
  const LearningConfig config = LearningConfig::FromFile(file);
  Trainer trainer(config, args.out);
  const TrainSummary s = trainer.Run(g.Trace());
  std::cout << "episodes " << s.episodes << ", aborted " << s.aborted << ", checkpoints "
            << s.checkpoints.size() << '\n';
  for (const CheckpointInfo& c : s.checkpoints) std::cout << "  " << c.path << '\n';
  return s.aborted > 0 ? kExitFailure : kExitOk;
}

// Tournament.
struct TournamentArgs {
  std::string config;
  std::string out = "descent-experiment";
  std::vector<std::string> sets;
};

int CmdTournament(const TournamentArgs& args, Globals& g) {
  ConfigFile file = LoadWithOverrides(args.config, args.sets);
  if (g.seed) file.Set("seed", std::to_string(*g.seed));
  const ExperimentSchedule schedule = ExperimentSchedule::FromFile(file);
  const ExperimentResult r = RunExperiment(schedule, args.out, &std::cout);
  std::cout << HeadToHeadCsv(r.head_to_head);
  if (r.aborted_episodes > 0 || r.illegal_moves > 0) {
    std::cout << "aborted episodes " << r.aborted_episodes << ", illegal moves " << r.illegal_moves
              << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

// Play.
struct PlayArgs {
  std::string game = "hex";
  int size = 5;
  bool swap = false;
  std::string checkpoint;
  std::string search = "descent";
  std::string budget_mode = "iterations";
  double budget = 500;
  std::string heuristic = "classic";
  std::string human = "first";
  bool auto_play = false;
};

std::unique_ptr<Evaluator> LoadEvaluator(const Game& game, const std::string& path) {
  if (path.empty()) return FunctionEvaluator::Constant(0);
  const std::string bytes = nnet::ReadFileBytes(path);
  if (bytes.rfind("DSCTAB", 0) == 0) {
    auto table = std::make_unique<TableEvaluator>();
    table->Load(bytes);
    return table;
  }
  return std::make_unique<NetworkEvaluator>(game, nnet::DeserializeNetwork(bytes), nnet::TrainConfig{});
}

// Reads moves from a stream, re-prompting until a legal one arrives.
class HumanAgent : public Agent {
 public:
  HumanAgent(const Game& game, std::istream& in, std::ostream& out)
      : game_(game), in_(in), out_(out) {}
  Action Act(const GameState& state, const MobilityTally&, MatchRng&) override {
    for (;;) {
      out_ << "your move> " << std::flush;
      std::string line;
      if (!std::getline(in_, line)) return kResign;
      const size_t b = line.find_first_not_of(" \t");
      if (b == std::string::npos) continue;
      line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
      if (line == "resign" || line == "quit") return kResign;
      try {
        return game_.ParseAction(state, line);
      } catch (const IllegalAction& e) {
        out_ << e.what() << "; legal:";
        for (Action a : game_.LegalActions(state)) out_ << ' ' << game_.ActionToString(a);
        out_ << '\n';
      }
    }
  }
  std::string Name() const override { return "human"; }

 private:
  const Game& game_;
  std::istream& in_;
  std::ostream& out_;
};

// Prints the board after every move of the wrapped agent.
class Narrated : public Agent {
 public:
  Narrated(Agent& inner, const Game& game, std::ostream& out) : inner_(inner), game_(game), out_(out) {}
  void NewGame() override { inner_.NewGame(); }
  Action Act(const GameState& s, const MobilityTally& t, MatchRng& rng) override {
    const Action a = inner_.Act(s, t, rng);
    if (a == kResign) {
      out_ << inner_.Name() << " resigns\n";
      return a;
    }
    out_ << "ply " << s.ply + 1 << ": " << inner_.Name() << " plays " << game_.ActionToString(a) << '\n'
         << game_.ToAscii(game_.Apply(s, a)) << '\n';
    return a;
  }
  std::string Name() const override { return inner_.Name(); }

 private:
  Agent& inner_;
  const Game& game_;
  std::ostream& out_;
};

int CmdPlay(const PlayArgs& args, Globals& g) {
  GameConfig gc{ParseGameKind(args.game), args.game == "tictactoe" ? 3 : args.size, args.swap};
  auto game = MakeGame(gc);
  auto f_theta = LoadEvaluator(*game, args.checkpoint);
  TerminalEval f_t(*game, ParseHeuristic(args.heuristic));
  SearchOptions opt;
  opt.algorithm = ParseAlgorithm(args.search);
  opt.budget = Budget::Parse(args.budget_mode, args.budget);
  opt.trace = g.Trace();
  SearchAgent engine(*game, *f_theta, f_t, opt);
  SearchAgent engine2(*game, *f_theta, f_t, opt);
  HumanAgent human(*game, std::cin, std::cout);
  Narrated a(engine, *game, std::cout);
  Narrated b(args.auto_play ? static_cast<Agent&>(engine2) : static_cast<Agent&>(human), *game,
             std::cout);
  const bool human_first = args.human == "first";
  std::cout << game->Describe() << '\n' << game->ToAscii(game->InitialState()) << '\n';
  const uint64_t seed = g.seed.value_or(1);
  const MatchRecord m = human_first ? PlayMatch(b, a, *game, seed) : PlayMatch(a, b, *game, seed);
  std::cout << "result " << (m.result > 0 ? "first player wins" : m.result < 0 ? "second player wins" : "draw")
            << " after " << m.plies << " plies" << (m.resigned ? " (resignation)" : "") << '\n';
  return m.illegal ? kExitFailure : kExitOk;
}

// Verify.
int CmdVerify(const std::string& suite, tools::VerifyOptions opt, Globals& g) {
  if (g.seed) opt.seed = *g.seed;
  std::vector<tools::Check> checks;
  if (suite == "oracle") {
    checks = tools::VerifyOracle(opt, std::cout);
  } else if (suite == "gradcheck") {
    checks = tools::VerifyGradcheck(opt, std::cout);
  } else if (suite == "distributions") {
    checks = tools::VerifyDistributions(opt, std::cout);
  } else {
    checks = tools::VerifyCompletion(opt, std::cout);
  }
  int failed = 0;
  for (const tools::Check& c : checks) failed += !c.passed;
  std::cout << suite << ": " << checks.size() - failed << "/" << checks.size() << " passed\n";
  if (failed) {
    std::cout << "failed:\n";
    for (const tools::Check& c : checks) {
      if (!c.passed) std::cout << "  " << c.name << '\n';
    }
  }
  return failed ? kExitFailure : kExitOk;
}

// Export.
struct ExportArgs {
  bool game_lengths = false;
  int games = 1000;
  std::string checkpoint;
  std::string out;
};

int CmdExport(const ExportArgs& args, Globals& g) {
  nlohmann::json doc;
  if (args.game_lengths) {
    const uint64_t seed = g.seed.value_or(1);
    for (GameConfig gc : {GameConfig{GameKind::kTicTacToe, 3}, GameConfig{GameKind::kHex, 5},
                          GameConfig{GameKind::kHex, 5, true}, GameConfig{GameKind::kOthello, 6},
                          GameConfig{GameKind::kOthello, 8}, GameConfig{GameKind::kBreakthrough, 5},
                          GameConfig{GameKind::kClobber, 5}}) {
      auto game = MakeGame(gc);
      doc["game_lengths"][game->Describe()] = {
          {"max_actions", game->MaxActions()},
          {"approximate", ApproximateGameLength(gc.kind, gc.size)},
          {"random_mean", EstimateMeanGameLength(*game, args.games, seed)},
      };
    }
  }
  if (!args.checkpoint.empty()) {
    const std::string bytes = nnet::ReadFileBytes(args.checkpoint);
    if (bytes.rfind("DSCTAB", 0) == 0) {
      TableEvaluator t;
      t.Load(bytes);
      doc["checkpoint"] = {{"kind", "table"}, {"entries", t.size()}};
    } else {
      const nnet::Network net = nnet::DeserializeNetwork(bytes);
      doc["checkpoint"] = {{"kind", "network"},
                           {"architecture", net.architecture().Describe()},
                           {"parameters", net.num_params()},
                           {"adam_steps", net.step()},
                           {"l2_norm", net.L2Norm()}};
    }
  }
  if (doc.is_null()) throw CLI::ValidationError("export", "nothing to export; pass --game-lengths or --checkpoint");
  const std::string text = doc.dump(2) + "\n";
  if (args.out.empty()) {
    std::cout << text;
  } else {
    nnet::WriteFileBytes(args.out, text);
  }
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"descent: self-play search and learning for two-player games"};
  app.footer(KeyHelp());
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "master seed (overrides the config seed)");
  app.add_option("--trace", g.trace_path, "write JSON-lines search/training traces to this file");

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "run self-play learning");
  train_cmd->add_option("-c,--config", train.config, "config file")->check(CLI::ExistingFile);
  train_cmd->add_option("-o,--out", train.out, "output directory")->capture_default_str();
  train_cmd->add_option("--set", train.sets, "override a config key (key=value), repeatable");
  train_cmd->add_option("--episodes", train.episodes, "override the episode count");

  TournamentArgs tour;
  auto* tour_cmd = app.add_subcommand("tournament", "train combinations and evaluate them all-play-all");
  tour_cmd->add_option("-c,--config", tour.config, "experiment config file")->required()->check(CLI::ExistingFile);
  tour_cmd->add_option("-o,--out", tour.out, "output directory")->capture_default_str();
  tour_cmd->add_option("--set", tour.sets, "override a config key (key=value), repeatable");

  PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "play against an engine from the terminal");
  play_cmd->add_option("--game", play.game, "tictactoe, hex, othello, breakthrough, clobber")->capture_default_str();
  play_cmd->add_option("--size", play.size, "board size")->capture_default_str();
  play_cmd->add_flag("--swap", play.swap, "Hex swap rule");
  play_cmd->add_option("--checkpoint", play.checkpoint, "evaluator checkpoint; default is a constant 0")->check(CLI::ExistingFile);
  play_cmd->add_option("--search", play.search, "search algorithm")->capture_default_str();
  play_cmd->add_option("--budget-mode", play.budget_mode, "iterations, nodes or seconds")->capture_default_str();
  play_cmd->add_option("--budget", play.budget, "per-move budget")->capture_default_str();
  play_cmd->add_option("--heuristic", play.heuristic, "terminal evaluation")->capture_default_str();
  play_cmd->add_option("--human", play.human, "human color")->check(CLI::IsMember({"first", "second"}))->capture_default_str();
  play_cmd->add_flag("--auto", play.auto_play, "engine against engine");

  std::string suite;
  tools::VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("suite", suite, "oracle, gradcheck, distributions or completion")
      ->required()
      ->check(CLI::IsMember({"oracle", "gradcheck", "distributions", "completion"}));
  verify_cmd->add_option("--draws", vopt.draws, "distributions: draws per cell")->capture_default_str();
  verify_cmd->add_option("--games", vopt.games, "completion: games per opponent")->capture_default_str();

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "write JSON reports");
  export_cmd->add_flag("--game-lengths", exp.game_lengths, "game-length constants and random-play means");
  export_cmd->add_option("--games", exp.games, "random games per estimate")->capture_default_str();
  export_cmd->add_option("--checkpoint", exp.checkpoint, "describe a checkpoint")->check(CLI::ExistingFile);
  export_cmd->add_option("-o,--out", exp.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (*train_cmd) return CmdTrain(train, g);
    if (*tour_cmd) return CmdTournament(tour, g);
    if (*play_cmd) return CmdPlay(play, g);
    if (*verify_cmd) return CmdVerify(suite, vopt, g);
    return CmdExport(exp, g);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\nsee --help for the config keys\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace
}  // namespace descent

int main(int argc, char** argv) { return descent::Main(argc, argv); }
