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

#include "descent/learning/config.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace descent {
namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T Number(const ConfigFile& f, const std::string& key) {
  const std::string& text = f.Get(key);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("config key '" + key + "': not a number: '" + text + "'");
  }
  return value;
}

bool Bool(const ConfigFile& f, const std::string& key) {
  const std::string& v = f.Get(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key '" + key + "': expected true or false, got '" + v + "'");
}

template <typename F>
auto Parsed(const ConfigFile& f, const std::string& key, F parse) {
  try {
    return parse(f.Get(key));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("config key '" + key + "': " + e.what());
  }
}

// Shortest text that parses back to the same double.
std::string Fmt(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

ConfigFile ConfigFile::Parse(std::string_view text) {
  ConfigFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = Trim(std::string_view(line).substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    out.values_[key] = Trim(std::string_view(line).substr(eq + 1));
  }
  return out;
}

ConfigFile ConfigFile::Load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return Parse(ss.str());
}

const std::string& ConfigFile::Get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key '" + key + "'");
  return it->second;
}

std::string DataModeName(DataMode mode) {
  switch (mode) {
    case DataMode::kTree: return "tree";
    case DataMode::kRoot: return "root";
    case DataMode::kTerminal: return "terminal";
  }
  return "";
}

DataMode ParseDataMode(std::string_view name) {
  if (name == "tree") return DataMode::kTree;
  if (name == "root") return DataMode::kRoot;
  if (name == "terminal") return DataMode::kTerminal;
  throw std::invalid_argument("unknown data mode '" + std::string(name) +
                              "' (expected tree, root or terminal)");
}

const std::vector<KeyDoc>& TrainingKeys() {
  static const std::vector<KeyDoc> keys = {
      {"game", "", "tictactoe, hex, othello, breakthrough or clobber"},
      {"size", "5", "board size (TicTacToe: 3)"},
      {"swap", "false", "Hex swap rule"},
      {"search", "descent",
       "ubfm, completed_ubfm, descent, completed_descent, ubfm_s, alphabeta or mcts"},
      {"budget_mode", "iterations", "iterations, nodes or seconds"},
      {"budget", "500", "search budget per move"},
      {"uct_c", "0.4", "UCT exploration constant (mcts)"},
      {"data", "tree", "tree, root or terminal learning"},
      {"heuristic", "classic",
       "classic, depth_additive, depth_multiplicative, score, mobility or presence"},
      {"normalize", "true", "divide terminal values by the heuristic's constant"},
      {"policy", "epsilon_greedy", "epsilon_greedy, softmax or ordinal"},
      {"temperature", "1", "softmax temperature"},
      {"completed_policy", "false", "always play resolved wins, avoid resolved losses"},
      {"evaluator", "network", "network or table"},
      {"architecture", "desk", "desk, large or a layer descriptor such as 'in3x7x7 dense64 relu dense1'"},
      {"batch_size", "128", "SGD batch size B"},
      {"l2", "0.001", "L2 coefficient lambda"},
      {"learning_rate", "0.001", "Adam step size"},
      {"adam_beta1", "0.9", "Adam beta1"},
      {"adam_beta2", "0.999", "Adam beta2"},
      {"adam_epsilon", "1e-08", "Adam epsilon"},
      {"replay_capacity", "100000", "replay memory size mu"},
      {"replay_unit", "pairs", "mu counts pairs or games"},
      {"replay_sigma", "0.04", "replay sampling rate sigma in (0, 1]"},
      {"episodes", "100", "number of self-play games"},
      {"checkpoint_every", "50", "checkpoint cadence in episodes"},
      {"seed", "1", "master seed"},
      {"ply_cap", "1000", "abort a self-play game beyond this many plies"},
      {"clock", "episodes", "annealing clock: episodes or wallclock"},
      {"time_limit", "0", "seconds of training for the wallclock clock (0: episodes only)"},
  };
  return keys;
}

LearningConfig LearningConfig::FromFile(const ConfigFile& given) {
  std::set<std::string> known;
  ConfigFile f;
  for (const KeyDoc& k : TrainingKeys()) {
    known.insert(k.key);
    if (*k.default_value) f.Set(k.key, k.default_value);
  }
  for (const auto& [key, value] : given.values()) {
    if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
    f.Set(key, value);
  }
  LearningConfig c;
  c.game.kind = Parsed(f, "game", [](const std::string& v) { return ParseGameKind(v); });
  if (c.game.kind == GameKind::kTicTacToe && !given.Has("size")) f.Set("size", "3");
  c.game.size = Number<int>(f, "size");
  c.game.swap = Bool(f, "swap");
  c.search.algorithm = Parsed(f, "search", [](const std::string& v) { return ParseAlgorithm(v); });
  c.search.budget = Parsed(f, "budget", [&](const std::string&) {
    return Budget::Parse(f.Get("budget_mode"), Number<double>(f, "budget"));
  });
  c.search.uct_c = Number<double>(f, "uct_c");
  c.data = Parsed(f, "data", [](const std::string& v) { return ParseDataMode(v); });
  c.heuristic = Parsed(f, "heuristic", [](const std::string& v) { return ParseHeuristic(v); });
  c.normalize = Bool(f, "normalize");
  c.policy.kind = Parsed(f, "policy", [](const std::string& v) { return ParsePolicy(v); });
  c.policy.temperature = Number<double>(f, "temperature");
  c.policy.completed = Bool(f, "completed_policy");
  const std::string& ev = f.Get("evaluator");
  if (ev == "network") {
    c.evaluator = EvaluatorKind::kNetwork;
  } else if (ev == "table") {
    c.evaluator = EvaluatorKind::kTable;
  } else {
    throw ConfigError("config key 'evaluator': expected network or table, got '" + ev + "'");
  }
  c.architecture = f.Get("architecture");
  c.batch_size = Number<int>(f, "batch_size");
  c.l2 = Number<double>(f, "l2");
  c.learning_rate = Number<double>(f, "learning_rate");
  c.adam_beta1 = Number<double>(f, "adam_beta1");
  c.adam_beta2 = Number<double>(f, "adam_beta2");
  c.adam_epsilon = Number<double>(f, "adam_epsilon");
  c.replay_capacity = Number<size_t>(f, "replay_capacity");
  c.replay_unit = Parsed(f, "replay_unit", [](const std::string& v) { return ParseReplayUnit(v); });
  c.replay_sigma = Number<double>(f, "replay_sigma");
  c.episodes = Number<int64_t>(f, "episodes");
  c.checkpoint_every = Number<int64_t>(f, "checkpoint_every");
  c.seed = Number<uint64_t>(f, "seed");
  c.ply_cap = Number<int>(f, "ply_cap");
  const std::string& clock = f.Get("clock");
  if (clock != "episodes" && clock != "wallclock") {
    throw ConfigError("config key 'clock': expected episodes or wallclock, got '" + clock + "'");
  }
  c.wallclock = clock == "wallclock";
  c.time_limit = Number<double>(f, "time_limit");

  if (c.batch_size < 1) throw ConfigError("config key 'batch_size': must be >= 1");
  if (c.l2 < 0) throw ConfigError("config key 'l2': must be >= 0");
  if (c.episodes < 0) throw ConfigError("config key 'episodes': must be >= 0");
  if (c.checkpoint_every < 1) throw ConfigError("config key 'checkpoint_every': must be >= 1");
  if (c.replay_capacity < 1) throw ConfigError("config key 'replay_capacity': must be >= 1");
  if (!(c.replay_sigma > 0 && c.replay_sigma <= 1)) {
    throw ConfigError("config key 'replay_sigma': must be in (0, 1]");
  }
  if (c.policy.temperature <= 0) throw ConfigError("config key 'temperature': must be > 0");
  if (c.ply_cap < 1) throw ConfigError("config key 'ply_cap': must be >= 1");
  if (c.wallclock && c.time_limit <= 0) {
    throw ConfigError("config key 'time_limit': must be > 0 with clock = wallclock");
  }
  return c;
}

std::string LearningConfig::ToText() const {
  std::ostringstream out;
  out << "game = " << GameKindName(game.kind) << "\n"
      << "size = " << game.size << "\n"
      << "swap = " << (game.swap ? "true" : "false") << "\n"
      << "search = " << AlgorithmName(search.algorithm) << "\n";
  const char* mode = search.budget.mode == Budget::Mode::kIterations ? "iterations"
                     : search.budget.mode == Budget::Mode::kNodes    ? "nodes"
                                                                     : "seconds";
  out << "budget_mode = " << mode << "\n"
      << "budget = " << Fmt(search.budget.amount) << "\n"
      << "uct_c = " << Fmt(search.uct_c) << "\n"
      << "data = " << DataModeName(data) << "\n"
      << "heuristic = " << HeuristicName(heuristic) << "\n"
      << "normalize = " << (normalize ? "true" : "false") << "\n"
      << "policy = " << PolicyName(policy.kind) << "\n"
      << "temperature = " << Fmt(policy.temperature) << "\n"
      << "completed_policy = " << (policy.completed ? "true" : "false") << "\n"
      << "evaluator = " << (evaluator == EvaluatorKind::kNetwork ? "network" : "table") << "\n"
      << "architecture = " << architecture << "\n"
      << "batch_size = " << batch_size << "\n"
      << "l2 = " << Fmt(l2) << "\n"
      << "learning_rate = " << Fmt(learning_rate) << "\n"
      << "adam_beta1 = " << Fmt(adam_beta1) << "\n"
      << "adam_beta2 = " << Fmt(adam_beta2) << "\n"
      << "adam_epsilon = " << Fmt(adam_epsilon) << "\n"
      << "replay_capacity = " << replay_capacity << "\n"
      << "replay_unit = " << ReplayUnitName(replay_unit) << "\n"
      << "replay_sigma = " << Fmt(replay_sigma) << "\n"
      << "episodes = " << episodes << "\n"
      << "checkpoint_every = " << checkpoint_every << "\n"
      << "seed = " << seed << "\n"
      << "ply_cap = " << ply_cap << "\n"
      << "clock = " << (wallclock ? "wallclock" : "episodes") << "\n"
      << "time_limit = " << Fmt(time_limit) << "\n";
  return out.str();
}

}  // namespace descent
