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

#include "descent/search/solver.h"

#include <algorithm>

namespace descent {

int Solver::Value(const GameState& state) {
  if (state.terminal()) return game_.Gain(state);
  if (auto it = memo_.find(state.key); it != memo_.end()) return it->second;
  const int sign = Sign(state.to_move);
  int best = -sign;
  for (Action a : game_.LegalActions(state)) {
    const int v = Value(game_.ApplyUnchecked(state, a));
    if (sign * v > sign * best) best = v;
    if (best == sign) break;
  }
  memo_[state.key] = static_cast<int8_t>(best);
  return best;
}

std::vector<Action> Solver::OptimalActions(const GameState& state) {
  const int target = Value(state);
  std::vector<Action> out;
  for (Action a : game_.LegalActions(state)) {
    if (Value(game_.ApplyUnchecked(state, a)) == target) out.push_back(a);
  }
  return out;
}

}  // namespace descent
