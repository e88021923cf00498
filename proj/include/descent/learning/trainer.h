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

#ifndef DESCENT_LEARNING_TRAINER_H_
#define DESCENT_LEARNING_TRAINER_H_

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "descent/eval/evaluator.h"
#include "descent/eval/terminal_eval.h"
#include "descent/game/game.h"
#include "descent/learning/config.h"
#include "descent/learning/episode.h"
#include "descent/learning/replay.h"

namespace descent {

// Builds the adaptive evaluator a config asks for (network input shape
// from the game's encoding, tanh output iff the heuristic is classic).
std::unique_ptr<Evaluator> MakeEvaluator(const Game& game, const LearningConfig& config);

struct CheckpointInfo {
  int64_t episode = 0;
  std::string path;
};

struct TrainSummary {
  int64_t episodes = 0;
  int64_t aborted = 0;
  std::vector<CheckpointInfo> checkpoints;
};

// Self-play training loop: episode, augmentation, replay, one learning
// phase, repeated for the episode budget. Writes into out_dir (when not
// empty): config.txt, train_log.csv and ckpt-<episode>.bin files.
class Trainer {
 public:
  explicit Trainer(LearningConfig config, std::string out_dir = "");

  // Throws nnet::NonFiniteLoss after keeping the last good checkpoint.
  TrainSummary Run(std::ostream* trace = nullptr);

  const Game& game() const { return *game_; }
  const Evaluator& evaluator() const { return *evaluator_; }
  Evaluator& evaluator() { return *evaluator_; }
  const TerminalEval& terminal_eval() const { return *f_t_; }
  const LearningConfig& config() const { return config_; }

 private:
  CheckpointInfo SaveCheckpoint(int64_t episode);

  LearningConfig config_;
  std::string out_dir_;
  std::unique_ptr<Game> game_;
  std::unique_ptr<TerminalEval> f_t_;
  std::unique_ptr<Evaluator> evaluator_;
};

}  // namespace descent

#endif  // DESCENT_LEARNING_TRAINER_H_
