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

#ifndef DESCENT_EVAL_EVALUATOR_H_
#define DESCENT_EVAL_EVALUATOR_H_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "descent/game/game.h"
#include "descent/nnet/network.h"

namespace descent {

struct LabeledState {
  GameState state;
  double value = 0;
};

struct FitStats {
  double mean_squared_error = 0;
  int samples = 0;
  int steps = 0;
};

// Adaptive evaluation f_theta of non-terminal states, first-player view.
class Evaluator {
 public:
  virtual ~Evaluator() = default;

  double Evaluate(const GameState& state) const;
  // Element-wise equal to Evaluate on each state.
  std::vector<double> EvaluateChildren(std::span<const GameState> states) const;

  // One learning phase on the given pairs.
  virtual FitStats Fit(std::span<const LabeledState> data) = 0;

  // Opaque checkpoint bytes, and the inverse.
  virtual std::string Save() const = 0;
  virtual void Load(const std::string& bytes) = 0;
  virtual std::string Describe() const = 0;

 protected:
  virtual void EvaluateBatch(std::span<const GameState* const> states,
                             std::span<double> out) const = 0;
};

// Hash map from state key to value; unseen states are worth 0. Fit
// overwrites each stored value with its target.
class TableEvaluator : public Evaluator {
 public:
  FitStats Fit(std::span<const LabeledState> data) override;
  std::string Save() const override;
  void Load(const std::string& bytes) override;
  std::string Describe() const override { return "table"; }

  size_t size() const { return table_.size(); }
  void Set(StateKey key, double value) { table_[key] = value; }
  bool Contains(StateKey key) const { return table_.count(key) > 0; }

 protected:
  void EvaluateBatch(std::span<const GameState* const> states,
                     std::span<double> out) const override;

 private:
  std::unordered_map<StateKey, double> table_;
};

class NetworkEvaluator : public Evaluator {
 public:
  NetworkEvaluator(const Game& game, nnet::Network net, nnet::TrainConfig cfg);

  FitStats Fit(std::span<const LabeledState> data) override;
  std::string Save() const override;
  void Load(const std::string& bytes) override;
  std::string Describe() const override;

  const nnet::Network& network() const { return net_; }
  nnet::Network& network() { return net_; }
  const nnet::TrainConfig& train_config() const { return cfg_; }

 protected:
  void EvaluateBatch(std::span<const GameState* const> states,
                     std::span<double> out) const override;

 private:
  const Game& game_;
  nnet::Network net_;
  nnet::TrainConfig cfg_;
};

// Fixed function; handy for tests and baselines. Fit is a no-op.
class FunctionEvaluator : public Evaluator {
 public:
  explicit FunctionEvaluator(std::function<double(const GameState&)> fn)
      : fn_(std::move(fn)) {}
  static std::unique_ptr<FunctionEvaluator> Constant(double value) {
    return std::make_unique<FunctionEvaluator>([value](const GameState&) { return value; });
  }

  FitStats Fit(std::span<const LabeledState>) override { return {}; }
  std::string Save() const override { return ""; }
  void Load(const std::string&) override {}
  std::string Describe() const override { return "function"; }

 protected:
  void EvaluateBatch(std::span<const GameState* const> states,
                     std::span<double> out) const override {
    for (size_t i = 0; i < states.size(); ++i) out[i] = fn_(*states[i]);
  }

 private:
  std::function<double(const GameState&)> fn_;
};

}  // namespace descent

#endif  // DESCENT_EVAL_EVALUATOR_H_
