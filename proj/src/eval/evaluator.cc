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

#include "descent/eval/evaluator.h"

#include <algorithm>
#include <cstring>

#include "descent/nnet/checkpoint.h"

namespace descent {

double Evaluator::Evaluate(const GameState& state) const {
  const GameState* ptr = &state;
  double out = 0;
  EvaluateBatch({&ptr, 1}, {&out, 1});
  return out;
}

std::vector<double> Evaluator::EvaluateChildren(std::span<const GameState> states) const {
  std::vector<const GameState*> ptrs;
  ptrs.reserve(states.size());
  for (const GameState& s : states) ptrs.push_back(&s);
  std::vector<double> out(states.size());
  if (!ptrs.empty()) EvaluateBatch(ptrs, out);
  return out;
}

// Table ---------------------------------------------------------------------

namespace {
constexpr char kTableMagic[8] = {'D', 'S', 'C', 'T', 'A', 'B', '\0', '\0'};
}  // namespace

void TableEvaluator::EvaluateBatch(std::span<const GameState* const> states,
                                   std::span<double> out) const {
  for (size_t i = 0; i < states.size(); ++i) {
    const auto it = table_.find(states[i]->key);
    out[i] = it == table_.end() ? 0.0 : it->second;
  }
}

FitStats TableEvaluator::Fit(std::span<const LabeledState> data) {
  FitStats stats;
  double sse = 0;
  for (const LabeledState& d : data) {
    const auto it = table_.find(d.state.key);
    const double before = it == table_.end() ? 0.0 : it->second;
    sse += (before - d.value) * (before - d.value);
    table_[d.state.key] = d.value;
  }
  stats.samples = static_cast<int>(data.size());
  stats.steps = data.empty() ? 0 : 1;
  stats.mean_squared_error = data.empty() ? 0 : sse / data.size();
  return stats;
}

std::string TableEvaluator::Save() const {
  std::vector<std::pair<StateKey, double>> entries(table_.begin(), table_.end());
  std::sort(entries.begin(), entries.end());
  std::string out(kTableMagic, sizeof(kTableMagic));
  const uint64_t n = entries.size();
  out.append(reinterpret_cast<const char*>(&n), sizeof(n));
  for (const auto& [key, value] : entries) {
    out.append(reinterpret_cast<const char*>(&key), sizeof(key));
    out.append(reinterpret_cast<const char*>(&value), sizeof(value));
  }
  return out;
}

void TableEvaluator::Load(const std::string& bytes) {
  constexpr size_t kEntry = sizeof(StateKey) + sizeof(double);
  if (bytes.size() < 16 || bytes.compare(0, 8, std::string(kTableMagic, 8)) != 0) {
    throw nnet::CheckpointError("not a table checkpoint");
  }
  uint64_t n = 0;
  std::memcpy(&n, bytes.data() + 8, sizeof(n));
  if ((bytes.size() - 16) % kEntry != 0 || (bytes.size() - 16) / kEntry != n) {
    throw nnet::CheckpointError("table checkpoint has wrong length");
  }
  table_.clear();
  for (uint64_t i = 0; i < n; ++i) {
    StateKey key;
    double value;
    std::memcpy(&key, bytes.data() + 16 + i * kEntry, sizeof(key));
    std::memcpy(&value, bytes.data() + 16 + i * kEntry + sizeof(key), sizeof(value));
    table_[key] = value;
  }
}

// Network -------------------------------------------------------------------

NetworkEvaluator::NetworkEvaluator(const Game& game, nnet::Network net, nnet::TrainConfig cfg)
    : game_(game), net_(std::move(net)), cfg_(cfg) {
  const PlaneShape shape = game.EncodingShape();
  const PlaneShape in = net_.architecture().input;
  if (shape.planes != in.planes || shape.height != in.height || shape.width != in.width) {
    throw std::invalid_argument("network input " + net_.architecture().Describe() +
                                " does not match encoding of " + game.Describe());
  }
}

void NetworkEvaluator::EvaluateBatch(std::span<const GameState* const> states,
                                     std::span<double> out) const {
  const size_t width = net_.input_size();
  std::vector<float> planes(states.size() * width);
  for (size_t i = 0; i < states.size(); ++i) {
    game_.EncodePlanes(*states[i], std::span<float>(planes).subspan(i * width, width));
  }
  const std::vector<float> y = net_.Forward(planes, static_cast<int>(states.size()));
  std::copy(y.begin(), y.end(), out.begin());
}

FitStats NetworkEvaluator::Fit(std::span<const LabeledState> data) {
  if (data.empty()) return {};
  const size_t width = net_.input_size();
  std::vector<float> planes(data.size() * width);
  std::vector<float> targets(data.size());
  for (size_t i = 0; i < data.size(); ++i) {
    game_.EncodePlanes(data[i].state, std::span<float>(planes).subspan(i * width, width));
    targets[i] = static_cast<float>(data[i].value);
  }
  const nnet::TrainStats s = net_.TrainStep(planes, targets, cfg_);
  return {s.mean_squared_error, s.samples, s.steps};
}

std::string NetworkEvaluator::Save() const { return nnet::SerializeNetwork(net_); }

void NetworkEvaluator::Load(const std::string& bytes) {
  nnet::Network loaded = nnet::DeserializeNetwork(bytes);
  if (!(loaded.architecture() == net_.architecture())) {
    throw nnet::CheckpointError("architecture mismatch: checkpoint has '" +
                                loaded.architecture().Describe() + "', expected '" +
                                net_.architecture().Describe() + "'");
  }
  net_ = std::move(loaded);
}

std::string NetworkEvaluator::Describe() const {
  return "network " + net_.architecture().Describe();
}

}  // namespace descent
