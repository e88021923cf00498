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

#include "descent/learning/replay.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace descent {

ReplayUnit ParseReplayUnit(std::string_view name) {
  if (name == "pairs") return ReplayUnit::kPairs;
  if (name == "games") return ReplayUnit::kGames;
  throw std::invalid_argument("unknown replay unit '" + std::string(name) +
                              "' (expected pairs or games)");
}

std::string ReplayUnitName(ReplayUnit unit) {
  return unit == ReplayUnit::kPairs ? "pairs" : "games";
}

ReplayBuffer::ReplayBuffer(size_t capacity, double sigma, ReplayUnit unit)
    : capacity_(capacity), sigma_(sigma), unit_(unit) {
  if (capacity == 0) throw std::invalid_argument("replay capacity must be >= 1");
  if (!(sigma > 0 && sigma <= 1)) throw std::invalid_argument("replay sigma must be in (0, 1]");
}

void ReplayBuffer::Push(std::vector<LabeledState> pairs) {
  game_sizes_.push_back(pairs.size());
  for (LabeledState& p : pairs) pairs_.push_back(std::move(p));
  if (unit_ == ReplayUnit::kPairs) {
    // Game boundaries follow the evicted pairs.
    while (pairs_.size() > capacity_) {
      while (game_sizes_.front() == 0) game_sizes_.pop_front();
      pairs_.pop_front();
      --game_sizes_.front();
    }
    while (game_sizes_.size() > 1 && game_sizes_.front() == 0) game_sizes_.pop_front();
  } else {
    while (game_sizes_.size() > capacity_) {
      for (size_t i = 0; i < game_sizes_.front(); ++i) pairs_.pop_front();
      game_sizes_.pop_front();
    }
  }
}

std::vector<LabeledState> ReplayBuffer::Sample(Rng& rng) const {
  const double threshold = sigma_ * static_cast<double>(capacity_);
  size_t take = pairs_.size();
  if (unit_ == ReplayUnit::kPairs) {
    if (static_cast<double>(pairs_.size()) > threshold) take = static_cast<size_t>(std::floor(threshold));
  } else if (static_cast<double>(game_sizes_.size()) > threshold) {
    take = static_cast<size_t>(
        std::floor(threshold / static_cast<double>(game_sizes_.size()) * pairs_.size()));
  }
  if (take >= pairs_.size()) return {pairs_.begin(), pairs_.end()};
  // Partial Fisher-Yates over indices.
  std::vector<size_t> idx(pairs_.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::vector<LabeledState> out;
  out.reserve(take);
  for (size_t i = 0; i < take; ++i) {
    const size_t j = std::uniform_int_distribution<size_t>(i, idx.size() - 1)(rng);
    std::swap(idx[i], idx[j]);
    out.push_back(pairs_[idx[i]]);
  }
  return out;
}

}  // namespace descent
