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

#include "descent/learning/episode.h"

#include <algorithm>
#include <unordered_map>

namespace descent {
namespace {

// Keeps the last value per key, in first-seen order.
std::vector<LabeledState> Dedup(std::vector<LabeledState> data) {
  std::unordered_map<StateKey, size_t> index;
  std::vector<LabeledState> out;
  for (LabeledState& d : data) {
    auto [it, fresh] = index.try_emplace(d.state.key, out.size());
    if (fresh) {
      out.push_back(std::move(d));
    } else {
      out[it->second].value = d.value;
    }
  }
  return out;
}

}  // namespace

Episode RunEpisode(const EpisodeSetup& setup, double eps, Rng& rng) {
  const Game& game = setup.game;
  Episode ep;
  SearchTable table;
  GameState s = game.InitialState();
  std::vector<double> root_values;
  while (!s.terminal()) {
    if (s.ply >= setup.ply_cap) {
      ep.aborted = true;
      break;
    }
    const SearchResult r = setup.searcher.Search(s, ep.tally, table);
    const NodeRecord& root = *table.Find(s.key);
    ep.trajectory.push_back(s);
    root_values.push_back(r.value);
    const size_t pick = SelectChild(setup.policy, table, root, eps, rng);
    const Action a = root.actions[pick];
    ep.actions.push_back(a);
    ep.tally.Record(s.to_move, static_cast<int>(root.actions.size()));
    s = game.Apply(s, a);
  }
  ep.table_size = table.size();
  if (ep.aborted) return ep;
  ep.trajectory.push_back(s);
  ep.result = game.Gain(s);
  const double final_value = setup.f_t(s, ep.tally);
  switch (setup.mode) {
    case DataMode::kTree: {
      for (const auto& [key, rec] : table.records()) {
        if (rec.expanded || rec.state.terminal()) ep.data.push_back({rec.state, rec.v});
      }
      // The played terminal may lie outside the table (e.g. a move past
      // the searched tree).
      if (!table.Find(s.key)) ep.data.push_back({s, final_value});
      // Hash-map order is not meaningful; fix it for reproducibility.
      std::sort(ep.data.begin(), ep.data.end(), [](const LabeledState& a, const LabeledState& b) {
        return a.state.ply != b.state.ply ? a.state.ply < b.state.ply : a.state.key < b.state.key;
      });
      break;
    }
    case DataMode::kRoot:
      for (size_t i = 0; i + 1 < ep.trajectory.size(); ++i) {
        ep.data.push_back({ep.trajectory[i], root_values[i]});
      }
      ep.data.push_back({s, final_value});
      break;
    case DataMode::kTerminal:
      for (const GameState& g : ep.trajectory) ep.data.push_back({g, final_value});
      break;
  }
  ep.data = Dedup(std::move(ep.data));
  return ep;
}

std::vector<LabeledState> Augment(const Game& game, const std::vector<LabeledState>& data) {
  std::vector<LabeledState> out;
  out.reserve(data.size() * game.SymmetryCount());
  for (const LabeledState& d : data) {
    for (GameState& image : game.Symmetries(d.state)) out.push_back({std::move(image), d.value});
  }
  return Dedup(std::move(out));
}

}  // namespace descent
