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

#include "descent/learning/policy.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace descent {
namespace {

constexpr std::array<std::string_view, 3> kPolicyNames = {"epsilon_greedy", "softmax", "ordinal"};

double Uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

size_t UniformIndex(size_t n, Rng& rng) {
  return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

size_t Dispatch(const PolicyConfig& policy, std::span<const double> values, Player mover,
                double eps, Rng& rng) {
  switch (policy.kind) {
    case PolicyKind::kEpsilonGreedy: return SelectEpsilonGreedy(values, mover, eps, rng);
    case PolicyKind::kSoftmax: return SelectSoftmax(values, mover, policy.temperature, rng);
    case PolicyKind::kOrdinal: return SelectOrdinal(values, mover, eps, rng);
  }
  return 0;
}

}  // namespace

std::string PolicyName(PolicyKind kind) {
  return std::string(kPolicyNames[static_cast<int>(kind)]);
}

PolicyKind ParsePolicy(std::string_view name) {
  for (size_t i = 0; i < kPolicyNames.size(); ++i) {
    if (kPolicyNames[i] == name) return static_cast<PolicyKind>(i);
  }
  throw std::invalid_argument("unknown policy '" + std::string(name) +
                              "' (expected epsilon_greedy, softmax or ordinal)");
}

std::vector<size_t> RankBestFirst(std::span<const double> values, Player mover) {
  const int sign = Sign(mover);
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return sign * values[a] > sign * values[b];
  });
  return order;
}

size_t SelectEpsilonGreedy(std::span<const double> values, Player mover, double eps, Rng& rng) {
  if (values.empty()) throw std::invalid_argument("no candidate actions");
  if (Uniform01(rng) < eps) return RankBestFirst(values, mover)[0];
  return UniformIndex(values.size(), rng);
}

size_t SelectSoftmax(std::span<const double> values, Player mover, double temperature, Rng& rng) {
  if (values.empty()) throw std::invalid_argument("no candidate actions");
  if (!(temperature > 0)) throw std::invalid_argument("softmax temperature must be > 0");
  const int sign = Sign(mover);
  double top = -std::numeric_limits<double>::infinity();
  for (double v : values) top = std::max(top, sign * v);
  std::vector<double> weights(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    weights[i] = std::exp((sign * values[i] - top) / temperature);
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  double u = Uniform01(rng) * total;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  // Rounding left u just above the last weight; take the last positive one.
  for (size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0) return i;
  }
  return 0;
}

size_t SelectOrdinal(std::span<const double> values, Player mover, double eps, Rng& rng) {
  if (values.empty()) throw std::invalid_argument("no candidate actions");
  const std::vector<size_t> ranked = RankBestFirst(values, mover);
  const size_t n = ranked.size();
  for (size_t j = 0; j + 1 < n; ++j) {
    const double accept = (eps * static_cast<double>(n - j - 1) + 1) / static_cast<double>(n - j);
    if (Uniform01(rng) < accept) return ranked[j];
  }
  return ranked[n - 1];
}

size_t SelectChild(const PolicyConfig& policy, const SearchTable& table, const NodeRecord& node,
                   double eps, Rng& rng) {
  const Player mover = node.state.to_move;
  const int sign = Sign(mover);
  std::vector<size_t> candidates;
  std::vector<double> values;
  if (policy.completed) {
    std::vector<size_t> wins, safe;
    for (size_t i = 0; i < node.children.size(); ++i) {
      const NodeRecord& child = table.Child(node, i);
      if (child.resolved && child.r == sign) wins.push_back(i);
      if (!(child.resolved && child.r == -sign)) safe.push_back(i);
    }
    if (!wins.empty()) {
      size_t best = wins[0];
      for (size_t i : wins) {
        if (sign * table.Child(node, i).v > sign * table.Child(node, best).v) best = i;
      }
      return best;
    }
    candidates = safe;
  }
  if (candidates.empty()) {
    candidates.resize(node.children.size());
    std::iota(candidates.begin(), candidates.end(), size_t{0});
  }
  for (size_t i : candidates) values.push_back(table.Child(node, i).v);
  return candidates[Dispatch(policy, values, mover, eps, rng)];
}

}  // namespace descent
