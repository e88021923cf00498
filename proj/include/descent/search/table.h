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

#ifndef DESCENT_SEARCH_TABLE_H_
#define DESCENT_SEARCH_TABLE_H_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "descent/game/game.h"

namespace descent {

// Per-state search record. Values are from the first player's view. The
// child value v'(s, a) is the value of the child's own record, so
// transpositions share one value.
struct NodeRecord {
  GameState state;
  double v = 0;
  int8_t r = 0;           // resolution value, 0 unless resolved
  bool resolved = false;  // distinguishes a resolved draw from unresolved
  bool expanded = false;
  int64_t visits = 0;     // Monte Carlo samples backed into v
  std::vector<Action> actions;
  std::vector<StateKey> children;
  std::vector<int64_t> n;       // selection counts n(s, a)
  std::vector<int64_t> n_base;  // n when the state last became a search root
};

class SearchTable {
 public:
  NodeRecord* Find(StateKey key) {
    auto it = records_.find(key);
    return it == records_.end() ? nullptr : &it->second;
  }
  const NodeRecord* Find(StateKey key) const {
    auto it = records_.find(key);
    return it == records_.end() ? nullptr : &it->second;
  }
  // Inserts a fresh record for the state when missing. References stay
  // valid until Clear.
  NodeRecord& Insert(const GameState& state, bool* inserted = nullptr) {
    auto [it, fresh] = records_.try_emplace(state.key);
    if (fresh) it->second.state = state;
    if (inserted) *inserted = fresh;
    return it->second;
  }
  const NodeRecord& Child(const NodeRecord& node, size_t i) const {
    return records_.at(node.children[i]);
  }
  NodeRecord& Child(const NodeRecord& node, size_t i) { return records_.at(node.children[i]); }

  size_t size() const { return records_.size(); }
  void Clear() { records_.clear(); }
  const std::unordered_map<StateKey, NodeRecord>& records() const { return records_; }

 private:
  std::unordered_map<StateKey, NodeRecord> records_;
};

}  // namespace descent

#endif  // DESCENT_SEARCH_TABLE_H_
