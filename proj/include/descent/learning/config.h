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

#ifndef DESCENT_LEARNING_CONFIG_H_
#define DESCENT_LEARNING_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "descent/eval/terminal_eval.h"
#include "descent/game/game.h"
#include "descent/learning/policy.h"
#include "descent/learning/replay.h"
#include "descent/search/search.h"

namespace descent {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Line-oriented "key = value" text; '#' starts a comment. Later
// assignments win.
class ConfigFile {
 public:
  static ConfigFile Parse(std::string_view text);
  static ConfigFile Load(const std::string& path);

  void Set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool Has(const std::string& key) const { return values_.count(key) > 0; }
  const std::string& Get(const std::string& key) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

enum class DataMode { kTree, kRoot, kTerminal };
std::string DataModeName(DataMode mode);
DataMode ParseDataMode(std::string_view name);

enum class EvaluatorKind { kNetwork, kTable };

struct KeyDoc {
  const char* key;
  const char* default_value;  // empty means required
  const char* help;
};

// Every recognized training key with its default.
const std::vector<KeyDoc>& TrainingKeys();

struct LearningConfig {
  GameConfig game;
  SearchOptions search;
  DataMode data = DataMode::kTree;
  HeuristicKind heuristic = HeuristicKind::kClassic;
  bool normalize = true;
  PolicyConfig policy;
  EvaluatorKind evaluator = EvaluatorKind::kNetwork;
  std::string architecture = "desk";
  int batch_size = 128;
  double l2 = 0.001;
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  size_t replay_capacity = 100000;
  ReplayUnit replay_unit = ReplayUnit::kPairs;
  double replay_sigma = 0.04;
  int64_t episodes = 100;
  int64_t checkpoint_every = 50;
  uint64_t seed = 1;
  int ply_cap = 1000;
  bool wallclock = false;  // annealing clock from elapsed time
  double time_limit = 0;   // seconds, wall-clock clock only

  // Throws ConfigError naming the offending key.
  static LearningConfig FromFile(const ConfigFile& file);
  // Canonical key = value text of every key.
  std::string ToText() const;
};

}  // namespace descent

#endif  // DESCENT_LEARNING_CONFIG_H_
