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

#include "descent/search/search.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "json.hpp"

namespace descent {
namespace {

constexpr std::array<std::string_view, 7> kAlgorithmNames = {
    "ubfm", "completed_ubfm", "descent", "completed_descent", "ubfm_s", "alphabeta", "mcts"};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Resolution value as seen by comparisons; unresolved counts as 0.
int ROf(const NodeRecord& node) { return node.resolved ? node.r : 0; }

struct BudgetExhausted {};

}  // namespace

std::string AlgorithmName(Algorithm algo) {
  return std::string(kAlgorithmNames[static_cast<int>(algo)]);
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (size_t i = 0; i < kAlgorithmNames.size(); ++i) {
    if (kAlgorithmNames[i] == name) return static_cast<Algorithm>(i);
  }
  throw std::invalid_argument(
      "unknown search algorithm '" + std::string(name) +
      "' (expected ubfm, completed_ubfm, descent, completed_descent, ubfm_s, alphabeta or mcts)");
}

bool UsesCompletion(Algorithm algo) {
  return algo == Algorithm::kCompletedUbfm || algo == Algorithm::kCompletedDescent ||
         algo == Algorithm::kUbfmS;
}

std::string Budget::Describe() const {
  switch (mode) {
    case Mode::kIterations: return std::to_string(static_cast<int64_t>(amount)) + " iterations";
    case Mode::kNodes: return std::to_string(static_cast<int64_t>(amount)) + " nodes";
    case Mode::kSeconds: return std::to_string(amount) + " s";
  }
  return "";
}

Budget Budget::Parse(std::string_view mode, double amount) {
  if (!(amount > 0)) throw std::invalid_argument("search budget must be positive");
  if (mode == "iterations") return {Mode::kIterations, std::floor(amount)};
  if (mode == "nodes") return {Mode::kNodes, std::floor(amount)};
  if (mode == "seconds") return {Mode::kSeconds, amount};
  throw std::invalid_argument("unknown budget mode '" + std::string(mode) +
                              "' (expected iterations, nodes or seconds)");
}

size_t BestChild(const SearchTable& table, const NodeRecord& node, bool completion) {
  const int sign = Sign(node.state.to_move);
  size_t best = 0;
  std::pair<int, double> best_key{0, -kInf};
  for (size_t i = 0; i < node.children.size(); ++i) {
    const NodeRecord& child = table.Child(node, i);
    const std::pair<int, double> key{completion ? sign * ROf(child) : 0, sign * child.v};
    if (i == 0 || key > best_key) {
      best = i;
      best_key = key;
    }
  }
  return best;
}

size_t SafestChild(const SearchTable& table, const NodeRecord& node) {
  const int sign = Sign(node.state.to_move);
  size_t best = 0;
  std::tuple<int, int64_t, double> best_key{0, 0, -kInf};
  for (size_t i = 0; i < node.children.size(); ++i) {
    const NodeRecord& child = table.Child(node, i);
    const std::tuple<int, int64_t, double> key{sign * ROf(child), node.n[i] - node.n_base[i],
                                               sign * child.v};
    if (i == 0 || key > best_key) {
      best = i;
      best_key = key;
    }
  }
  return best;
}

size_t MostVisitedChild(const SearchTable& table, const NodeRecord& node) {
  const int sign = Sign(node.state.to_move);
  size_t best = 0;
  std::pair<int64_t, double> best_key{0, -kInf};
  for (size_t i = 0; i < node.children.size(); ++i) {
    const std::pair<int64_t, double> key{node.n[i], sign * table.Child(node, i).v};
    if (i == 0 || key > best_key) {
      best = i;
      best_key = key;
    }
  }
  return best;
}

bool NodeConsistent(const SearchTable& table, const NodeRecord& node, bool completion) {
  if (!node.expanded || node.children.empty()) return true;
  return table.Child(node, BestChild(table, node, completion)).v == node.v;
}

// One call of Searcher::Search.
class Searcher::Run {
 public:
  Run(const Searcher& s, SearchTable& table)
      : game_(s.game_), f_theta_(s.f_theta_), f_t_(s.f_t_), opt_(s.options_), table_(table),
        completion_(UsesCompletion(opt_.algorithm)),
        start_(std::chrono::steady_clock::now()) {}

  SearchResult Go(const GameState& root_state, const MobilityTally& tally) {
    if (root_state.terminal()) throw ContractViolation("search called on a terminal state");
    if (!(opt_.budget.amount > 0)) throw std::invalid_argument("search budget must be positive");
    NodeRecord& root = table_.Insert(root_state);
    root.n_base = root.n;
    switch (opt_.algorithm) {
      case Algorithm::kAlphaBeta:
        return AlphaBetaRoot(root, tally);
      case Algorithm::kMcts:
        return MctsRoot(root, tally);
      default:
        return BestFirstRoot(root, tally);
    }
  }

 private:
  bool BudgetLeft() const {
    switch (opt_.budget.mode) {
      case Budget::Mode::kIterations: return iterations_ < opt_.budget.amount;
      case Budget::Mode::kNodes: return evaluations_ < opt_.budget.amount;
      case Budget::Mode::kSeconds:
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() <
               opt_.budget.amount;
    }
    return false;
  }

  static MobilityTally After(const MobilityTally& tally, const NodeRecord& node) {
    MobilityTally next = tally;
    next.Record(node.state.to_move, static_cast<int>(node.actions.size()));
    return next;
  }

  // Creates the children's records; new terminal children get f_t and are
  // resolved, new non-terminal children are evaluated by f_theta in one
  // batch.
  void Expand(NodeRecord& node, const MobilityTally& tally) {
    node.actions = game_.LegalActions(node.state);
    const MobilityTally child_tally = After(tally, node);
    node.children.clear();
    std::vector<GameState> pending;
    std::vector<NodeRecord*> pending_nodes;
    for (Action a : node.actions) {
      GameState child = game_.ApplyUnchecked(node.state, a);
      node.children.push_back(child.key);
      bool fresh = false;
      NodeRecord& rec = table_.Insert(child, &fresh);
      if (!fresh) continue;
      ++evaluations_;
      if (child.terminal()) {
        rec.v = f_t_(child, child_tally);
        rec.r = static_cast<int8_t>(game_.Gain(child));
        rec.resolved = true;
      } else {
        pending.push_back(std::move(child));
        pending_nodes.push_back(&rec);
      }
    }
    const std::vector<double> values = f_theta_.EvaluateChildren(pending);
    for (size_t i = 0; i < values.size(); ++i) pending_nodes[i]->v = values[i];
    node.n.assign(node.actions.size(), 0);
    node.n_base.assign(node.actions.size(), 0);
    node.expanded = true;
    changed_ = true;
  }

  // Recomputes v, r and the resolved flag from the children.
  void Refresh(NodeRecord& node) {
    const int sign = Sign(node.state.to_move);
    const double old_v = node.v;
    const int8_t old_r = node.r;
    const bool old_resolved = node.resolved;
    node.v = table_.Child(node, BestChild(table_, node, completion_)).v;
    bool all_resolved = true, win = false;
    int best_r = -2;
    for (size_t i = 0; i < node.children.size(); ++i) {
      const NodeRecord& child = table_.Child(node, i);
      if (!child.resolved) {
        all_resolved = false;
        continue;
      }
      if (child.r == sign) win = true;
      best_r = std::max(best_r, sign * child.r);
    }
    node.resolved = win || all_resolved;
    node.r = node.resolved ? static_cast<int8_t>(sign * best_r) : 0;
    if (node.v != old_v || node.r != old_r || node.resolved != old_resolved) changed_ = true;
  }

  // Index of the child to descend into, or -1 when there is none.
  int SelectChild(const NodeRecord& node) const {
    if (!completion_) return static_cast<int>(BestChild(table_, node, false));
    const int sign = Sign(node.state.to_move);
    int best = -1;
    double best_v = -kInf;
    for (size_t i = 0; i < node.children.size(); ++i) {
      const NodeRecord& child = table_.Child(node, i);
      if (child.resolved) continue;
      if (best < 0 || sign * child.v > best_v) {
        best = static_cast<int>(i);
        best_v = sign * child.v;
      }
    }
    return best;
  }

  void BestFirst(NodeRecord& node, const MobilityTally& tally, bool descent) {
    path_.push_back(&node);
    if (node.state.terminal()) return;
    if (!node.expanded) {
      Expand(node, tally);
      Refresh(node);
      if (!descent) return;
    }
    if (completion_ && node.resolved) return;
    const int b = SelectChild(node);
    if (b < 0) {
      Refresh(node);
      return;
    }
    if (opt_.algorithm == Algorithm::kUbfmS) ++node.n[b];
    actions_.push_back(node.actions[b]);
    BestFirst(table_.Child(node, b), After(tally, node), descent);
    Refresh(node);
  }

  void Trace(const NodeRecord& root) {
    if (!opt_.trace) return;
    nlohmann::json rec;
    rec["iteration"] = iterations_;
    std::vector<std::string> moves;
    for (Action a : actions_) moves.push_back(game_.ActionToString(a));
    std::vector<double> values;
    for (const NodeRecord* n : path_) values.push_back(n->v);
    rec["path"] = moves;
    rec["values"] = values;
    rec["root_value"] = root.v;
    rec["root_resolved"] = root.resolved;
    rec["evaluations"] = evaluations_;
    *opt_.trace << rec.dump() << '\n';
  }

  SearchResult BestFirstRoot(NodeRecord& root, const MobilityTally& tally) {
    const bool descent = opt_.algorithm == Algorithm::kDescent ||
                         opt_.algorithm == Algorithm::kCompletedDescent;
    do {
      if (completion_ && root.expanded && root.resolved) break;
      changed_ = false;
      path_.clear();
      actions_.clear();
      BestFirst(root, tally, descent);
      ++iterations_;
      Trace(root);
      // Without completion an iteration that changed nothing repeats
      // forever, so the tree is final.
      if (!changed_) break;
    } while (BudgetLeft());
    SearchResult result = Summary(root);
    size_t choice = 0;
    if (opt_.algorithm == Algorithm::kUbfmS) {
      choice = SafestChild(table_, root);
    } else {
      choice = BestChild(table_, root, completion_);
    }
    result.action = root.actions[choice];
    return result;
  }

  SearchResult Summary(const NodeRecord& root) const {
    SearchResult result;
    result.value = root.v;
    result.resolved = root.resolved;
    result.r = root.r;
    result.iterations = iterations_;
    result.evaluations = evaluations_;
    return result;
  }

  // Monte Carlo ------------------------------------------------------------

  SearchResult MctsRoot(NodeRecord& root, const MobilityTally& tally) {
    if (!root.expanded && root.visits == 0) {
      root.v = f_theta_.Evaluate(root.state);
      ++evaluations_;
    }
    do {
      path_.clear();
      actions_.clear();
      NodeRecord* node = &root;
      MobilityTally t = tally;
      while (node->expanded && !node->state.terminal()) {
        path_.push_back(node);
        const size_t a = UctChild(*node);
        ++node->n[a];
        actions_.push_back(node->actions[a]);
        t = After(t, *node);
        node = &table_.Child(*node, a);
      }
      path_.push_back(node);
      if (!node->state.terminal()) Expand(*node, t);
      // A leaf is worth its own prior evaluation (or f_t when terminal).
      const double value = node->v;
      for (NodeRecord* n : path_) {
        ++n->visits;
        n->v += (value - n->v) / static_cast<double>(n->visits + 1);
      }
      ++iterations_;
      Trace(root);
    } while (BudgetLeft());
    SearchResult result = Summary(root);
    result.action = root.actions[MostVisitedChild(table_, root)];
    return result;
  }

  size_t UctChild(const NodeRecord& node) const {
    const int sign = Sign(node.state.to_move);
    int64_t total = 0;
    for (int64_t c : node.n) total += c;
    const double log_total = std::log(static_cast<double>(total) + 1);
    size_t best = 0;
    double best_score = -kInf;
    for (size_t i = 0; i < node.children.size(); ++i) {
      const double q = sign * table_.Child(node, i).v;
      const double score =
          q + opt_.uct_c * std::sqrt(log_total / (static_cast<double>(node.n[i]) + 1));
      if (i == 0 || score > best_score) {
        best = i;
        best_score = score;
      }
    }
    return best;
  }

  // Alpha-beta -------------------------------------------------------------

  // Records an exact value (terminal or fully inside the window).
  void RecordExact(const GameState& state, double v, bool internal) {
    NodeRecord& rec = table_.Insert(state);
    rec.v = v;
    if (state.terminal()) {
      rec.resolved = true;
      rec.r = static_cast<int8_t>(game_.Gain(state));
    } else if (internal) {
      rec.expanded = true;
    }
  }

  double Leaf(const GameState& state, const MobilityTally& tally) {
    ++evaluations_;
    if (state.terminal()) {
      const double v = f_t_(state, tally);
      RecordExact(state, v, false);
      return v;
    }
    hit_horizon_ = true;
    return f_theta_.Evaluate(state);
  }

  std::vector<Action> Ordered(const GameState& state) const {
    std::vector<Action> actions = game_.LegalActions(state);
    const auto pv = pv_.find(state.key);
    if (pv != pv_.end()) {
      auto it = std::find(actions.begin(), actions.end(), pv->second);
      if (it != actions.end()) std::rotate(actions.begin(), it, it + 1);
    }
    return actions;
  }

  double AlphaBeta(const GameState& state, const MobilityTally& tally, int depth, double alpha,
                   double beta) {
    if (state.terminal() || depth == 0) return Leaf(state, tally);
    if (opt_.budget.mode != Budget::Mode::kIterations && completed_depth_ > 0 && !BudgetLeft()) {
      throw BudgetExhausted{};
    }
    const std::vector<Action> actions = Ordered(state);
    MobilityTally next = tally;
    next.Record(state.to_move, static_cast<int>(actions.size()));
    const int sign = Sign(state.to_move);
    const double alpha0 = alpha, beta0 = beta;
    double best = -kInf * sign;
    Action best_action = actions[0];
    if (depth == 1) {
      // Frontier: evaluate every child in one batch.
      std::vector<GameState> children, pending;
      for (Action a : actions) children.push_back(game_.ApplyUnchecked(state, a));
      std::vector<double> values(children.size());
      for (size_t i = 0; i < children.size(); ++i) {
        if (children[i].terminal()) {
          values[i] = Leaf(children[i], next);
        } else {
          pending.push_back(children[i]);
        }
      }
      if (!pending.empty()) {
        hit_horizon_ = true;
        evaluations_ += static_cast<int64_t>(pending.size());
        const std::vector<double> batch = f_theta_.EvaluateChildren(pending);
        size_t j = 0;
        for (size_t i = 0; i < children.size(); ++i) {
          if (!children[i].terminal()) values[i] = batch[j++];
        }
      }
      for (size_t i = 0; i < children.size(); ++i) {
        if (sign * values[i] > sign * best) {
          best = values[i];
          best_action = actions[i];
        }
      }
      // Every child was evaluated, so the value is exact at this depth.
      RecordExact(state, best, true);
    } else {
      for (Action a : actions) {
        const double v = AlphaBeta(game_.ApplyUnchecked(state, a), next, depth - 1, alpha, beta);
        if (sign * v > sign * best) {
          best = v;
          best_action = a;
        }
        if (sign > 0) {
          alpha = std::max(alpha, best);
        } else {
          beta = std::min(beta, best);
        }
        if (alpha >= beta) break;
      }
      if (best > alpha0 && best < beta0) RecordExact(state, best, true);
    }
    pv_[state.key] = best_action;
    return best;
  }

  SearchResult AlphaBetaRoot(NodeRecord& root, const MobilityTally& tally) {
    const std::vector<Action> canonical = game_.LegalActions(root.state);
    MobilityTally next = tally;
    next.Record(root.state.to_move, static_cast<int>(canonical.size()));
    std::vector<double> best_values;
    Action best_action = canonical[0];
    double best_value = 0;
    for (int depth = 1;; ++depth) {
      hit_horizon_ = false;
      const std::vector<Action> order = Ordered(root.state);
      std::vector<double> values(canonical.size());
      try {
        for (Action a : order) {
          const size_t i = std::find(canonical.begin(), canonical.end(), a) - canonical.begin();
          values[i] = AlphaBeta(game_.ApplyUnchecked(root.state, a), next, depth - 1, -kInf, kInf);
        }
      } catch (const BudgetExhausted&) {
        break;
      }
      const int sign = Sign(root.state.to_move);
      size_t best = 0;
      for (size_t i = 1; i < values.size(); ++i) {
        if (sign * values[i] > sign * values[best]) best = i;
      }
      best_values = values;
      best_action = canonical[best];
      best_value = values[best];
      pv_[root.state.key] = best_action;
      completed_depth_ = depth;
      ++iterations_;
      if (opt_.trace) {
        nlohmann::json rec;
        rec["iteration"] = iterations_;
        rec["depth"] = depth;
        rec["best"] = game_.ActionToString(best_action);
        rec["root_value"] = best_value;
        rec["evaluations"] = evaluations_;
        *opt_.trace << rec.dump() << '\n';
      }
      if (!hit_horizon_ || !BudgetLeft()) break;
    }
    // Root record with exact child values for the selection policies.
    root.actions = canonical;
    root.children.clear();
    for (size_t i = 0; i < canonical.size(); ++i) {
      const GameState child = game_.ApplyUnchecked(root.state, canonical[i]);
      root.children.push_back(child.key);
      RecordExact(child, best_values[i], completed_depth_ > 1);
    }
    root.n.assign(canonical.size(), 0);
    root.n_base.assign(canonical.size(), 0);
    root.expanded = true;
    root.v = best_value;
    SearchResult result = Summary(root);
    result.action = best_action;
    result.depth = completed_depth_;
    if (!hit_horizon_) {
      result.resolved = true;
      result.r = static_cast<int8_t>((best_value > 0) - (best_value < 0));
    }
    return result;
  }

  const Game& game_;
  const Evaluator& f_theta_;
  const TerminalEval& f_t_;
  const SearchOptions& opt_;
  SearchTable& table_;
  const bool completion_;
  const std::chrono::steady_clock::time_point start_;
  int64_t iterations_ = 0;
  int64_t evaluations_ = 0;
  bool changed_ = false;
  std::vector<NodeRecord*> path_;
  std::vector<Action> actions_;
  // Alpha-beta state.
  std::unordered_map<StateKey, Action> pv_;
  bool hit_horizon_ = false;
  int completed_depth_ = 0;
};

Searcher::Searcher(const Game& game, const Evaluator& f_theta, const TerminalEval& f_t,
                   SearchOptions options)
    : game_(game), f_theta_(f_theta), f_t_(f_t), options_(options) {
  if (!(options_.budget.amount > 0)) throw std::invalid_argument("search budget must be positive");
  if (options_.uct_c < 0) throw std::invalid_argument("UCT constant must be >= 0");
}

SearchResult Searcher::Search(const GameState& root, const MobilityTally& tally,
                              SearchTable& table) {
  Run run(*this, table);
  return run.Go(root, tally);
}

}  // namespace descent
