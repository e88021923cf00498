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

#include "descent/learning/trainer.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "descent/nnet/architecture.h"
#include "descent/nnet/checkpoint.h"
#include "json.hpp"

namespace descent {

std::unique_ptr<Evaluator> MakeEvaluator(const Game& game, const LearningConfig& config) {
  if (config.evaluator == EvaluatorKind::kTable) return std::make_unique<TableEvaluator>();
  const bool tanh = config.heuristic == HeuristicKind::kClassic;
  const PlaneShape shape = game.EncodingShape();
  nnet::Architecture arch;
  if (config.architecture == "desk") {
    arch = nnet::Architecture::Desk(shape, tanh);
  } else if (config.architecture == "large") {
    arch = nnet::Architecture::Large(shape, tanh);
  } else {
    arch = nnet::Architecture::Parse(config.architecture);
  }
  nnet::TrainConfig tc;
  tc.batch_size = config.batch_size;
  tc.l2 = config.l2;
  tc.learning_rate = config.learning_rate;
  tc.beta1 = config.adam_beta1;
  tc.beta2 = config.adam_beta2;
  tc.epsilon = config.adam_epsilon;
  // Derive the init seed from the master seed so the two streams differ.
  return std::make_unique<NetworkEvaluator>(
      game, nnet::Network(arch, nnet::Init::kHeUniform, config.seed ^ 0x5eed5eed5eedULL), tc);
}

Trainer::Trainer(LearningConfig config, std::string out_dir)
    : config_(std::move(config)), out_dir_(std::move(out_dir)) {
  game_ = MakeGame(config_.game);
  f_t_ = std::make_unique<TerminalEval>(*game_, config_.heuristic, config_.normalize);
  evaluator_ = MakeEvaluator(*game_, config_);
}

CheckpointInfo Trainer::SaveCheckpoint(int64_t episode) {
  CheckpointInfo info{episode, ""};
  if (out_dir_.empty()) return info;
  char name[64];
  std::snprintf(name, sizeof(name), "ckpt-%06lld.bin", static_cast<long long>(episode));
  info.path = (std::filesystem::path(out_dir_) / name).string();
  nnet::WriteFileBytes(info.path, evaluator_->Save());
  return info;
}

TrainSummary Trainer::Run(std::ostream* trace) {
  std::ofstream log;
  if (!out_dir_.empty()) {
    std::filesystem::create_directories(out_dir_);
    std::ofstream(std::filesystem::path(out_dir_) / "config.txt") << config_.ToText();
    log.open(std::filesystem::path(out_dir_) / "train_log.csv");
    log << "episode,plies,result,aborted,data_pairs,train_pairs,mse,steps\n";
  }
  SearchOptions search = config_.search;
  search.trace = nullptr;
  Searcher searcher(*game_, *evaluator_, *f_t_, search);
  EpisodeSetup setup{*game_, searcher, *f_t_, config_.data, config_.policy, config_.ply_cap};
  ReplayBuffer replay(config_.replay_capacity, config_.replay_sigma, config_.replay_unit);
  Rng rng(config_.seed);
  TrainSummary summary;
  summary.checkpoints.push_back(SaveCheckpoint(0));
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  for (int64_t ep = 0; ep < config_.episodes; ++ep) {
    if (config_.wallclock && elapsed() >= config_.time_limit) break;
    const double eps = config_.wallclock
                           ? std::min(1.0, elapsed() / config_.time_limit)
                           : static_cast<double>(ep) / static_cast<double>(config_.episodes);
    Episode episode = RunEpisode(setup, eps, rng);
    FitStats fit;
    size_t train_pairs = 0;
    if (episode.aborted) {
      ++summary.aborted;
    } else {
      std::vector<LabeledState> batch = replay.PushSample(Augment(*game_, episode.data), rng);
      train_pairs = batch.size();
      fit = evaluator_->Fit(batch);
    }
    ++summary.episodes;
    if (log.is_open()) {
      log << ep + 1 << ',' << episode.actions.size() << ',' << episode.result << ','
          << (episode.aborted ? 1 : 0) << ',' << episode.data.size() << ',' << train_pairs << ','
          << fit.mean_squared_error << ',' << fit.steps << '\n';
    }
    if (trace) {
      nlohmann::json rec;
      rec["episode"] = ep + 1;
      rec["eps"] = eps;
      std::vector<std::string> moves;
      for (Action a : episode.actions) moves.push_back(game_->ActionToString(a));
      rec["moves"] = moves;
      rec["result"] = episode.result;
      rec["pairs"] = episode.data.size();
      rec["mse"] = fit.mean_squared_error;
      *trace << rec.dump() << '\n';
    }
    if ((ep + 1) % config_.checkpoint_every == 0 || ep + 1 == config_.episodes) {
      summary.checkpoints.push_back(SaveCheckpoint(ep + 1));
    }
  }
  if (summary.checkpoints.back().episode != summary.episodes) {
    summary.checkpoints.push_back(SaveCheckpoint(summary.episodes));
  }
  return summary;
}

}  // namespace descent
