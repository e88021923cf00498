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

#ifndef DESCENT_HARNESS_EXPERIMENT_H_
#define DESCENT_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "descent/harness/tournament.h"
#include "descent/learning/config.h"

namespace descent {

// One learning setup: overrides applied on top of the shared base config.
struct Combination {
  std::string id;
  std::vector<std::pair<std::string, std::string>> overrides;
};

enum class EvalMode { kGreedy, kSearch };

// Keys under "experiment." select the schedule; every other key is a
// learning key shared by all combinations.
//   experiment.combinations = a, b
//   experiment.combination.a = search=descent data=tree
//   experiment.mark_every, experiment.marks, experiment.repetitions,
//   experiment.eval (greedy | search), experiment.eval_budget,
//   experiment.matches_per_color, experiment.random_opening
struct ExperimentSchedule {
  ConfigFile base;
  std::vector<Combination> combinations;
  int64_t mark_every = 250;
  int marks = 8;
  int repetitions = 4;
  uint64_t seed = 1;
  EvalMode eval = EvalMode::kGreedy;
  int64_t eval_budget = 0;  // search mode; 0 keeps each combination's budget
  int matches_per_color = 1;
  int random_opening = 0;

  static ExperimentSchedule FromFile(const ConfigFile& file);
  // Learning config of one training run; its seed derives from the master.
  LearningConfig ConfigFor(size_t combination, int repetition) const;
  std::string ToText() const;
};

const std::vector<KeyDoc>& ExperimentKeys();

struct HeadToHead {
  std::string combination;
  std::string opponent;
  Standing record;
};

struct ExperimentResult {
  std::vector<CurvePoint> curves;
  std::vector<HeadToHead> head_to_head;  // final mark, both colors
  int64_t aborted_episodes = 0;
  int64_t illegal_moves = 0;
};

std::string HeadToHeadCsv(const std::vector<HeadToHead>& rows);

// Trains every combination x repetition, registers the checkpoints under
// out_dir/registry, evaluates every mark against all final-mark players and
// writes curves.csv, head_to_head.csv and experiment.txt.
ExperimentResult RunExperiment(const ExperimentSchedule& schedule, const std::string& out_dir,
                               std::ostream* log = nullptr);

}  // namespace descent

#endif  // DESCENT_HARNESS_EXPERIMENT_H_
