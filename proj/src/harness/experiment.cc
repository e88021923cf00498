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

#include "descent/harness/experiment.h"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <sstream>

#include "descent/harness/registry.h"
#include "descent/learning/trainer.h"
#include "descent/nnet/checkpoint.h"

namespace descent {
namespace {

constexpr std::string_view kPrefix = "experiment.";
constexpr std::string_view kCombinationPrefix = "experiment.combination.";

std::string Trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T Number(const std::string& key, const std::string& text, T min) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < min) {
    throw ConfigError("bad value '" + text + "' for key '" + key + "'");
  }
  return value;
}

}  // namespace

const std::vector<KeyDoc>& ExperimentKeys() {
  static const std::vector<KeyDoc> keys = {
      {"experiment.combinations", "", "comma-separated combination ids"},
      {"experiment.combination.<id>", "(none)", "space-separated key=value learning overrides"},
      {"experiment.mark_every", "250", "episodes between evaluation marks"},
      {"experiment.marks", "8", "number of marks; training runs mark_every*marks episodes"},
      {"experiment.repetitions", "4", "independent training runs per combination"},
      {"experiment.eval", "greedy", "greedy (depth-1 over f_theta) or search"},
      {"experiment.eval_budget", "0", "search-mode iterations per move; 0 keeps the training budget"},
      {"experiment.matches_per_color", "1", "matches per ordered pairing"},
      {"experiment.random_opening", "0", "uniformly random plies at the start of each match"},
  };
  return keys;
}

ExperimentSchedule ExperimentSchedule::FromFile(const ConfigFile& file) {
  ExperimentSchedule s;
  std::vector<std::string> ids;
  for (const auto& [key, value] : file.values()) {
    if (key.rfind(kPrefix, 0) != 0) {
      s.base.Set(key, value);
      continue;
    }
    if (key.rfind(kCombinationPrefix, 0) == 0) continue;
    if (key == "experiment.combinations") {
      std::stringstream ss(value);
      std::string id;
      while (std::getline(ss, id, ',')) {
        if (!Trim(id).empty()) ids.push_back(Trim(id));
      }
    } else if (key == "experiment.mark_every") {
      s.mark_every = Number<int64_t>(key, value, 1);
    } else if (key == "experiment.marks") {
      s.marks = Number<int>(key, value, 1);
    } else if (key == "experiment.repetitions") {
      s.repetitions = Number<int>(key, value, 1);
    } else if (key == "experiment.eval") {
      if (value == "greedy") {
        s.eval = EvalMode::kGreedy;
      } else if (value == "search") {
        s.eval = EvalMode::kSearch;
      } else {
        throw ConfigError("bad value '" + value + "' for key '" + key + "'");
      }
    } else if (key == "experiment.eval_budget") {
      s.eval_budget = Number<int64_t>(key, value, 0);
    } else if (key == "experiment.matches_per_color") {
      s.matches_per_color = Number<int>(key, value, 1);
    } else if (key == "experiment.random_opening") {
      s.random_opening = Number<int>(key, value, 0);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (ids.empty()) throw ConfigError("missing config key 'experiment.combinations'");
  for (const std::string& id : ids) {
    Combination c{id, {}};
    const std::string key = std::string(kCombinationPrefix) + id;
    if (file.Has(key)) {
      std::stringstream ss(file.Get(key));
      std::string item;
      while (ss >> item) {
        const size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw ConfigError("bad override '" + item + "' in key '" + key + "'");
        }
        c.overrides.emplace_back(item.substr(0, eq), item.substr(eq + 1));
      }
    }
    s.combinations.push_back(std::move(c));
  }
  if (s.base.Has("seed")) s.seed = Number<uint64_t>("seed", s.base.Get("seed"), 0);
  // Validate every combination up front.
  LearningConfig first;
  for (size_t c = 0; c < s.combinations.size(); ++c) {
    const LearningConfig lc = s.ConfigFor(c, 0);
    if (c == 0) first = lc;
    if (lc.game.kind != first.game.kind || lc.game.size != first.game.size ||
        lc.game.swap != first.game.swap) {
      throw ConfigError("all combinations must play the same game");
    }
  }
  return s;
}

LearningConfig ExperimentSchedule::ConfigFor(size_t combination, int repetition) const {
  ConfigFile f = base;
  for (const auto& [k, v] : combinations.at(combination).overrides) f.Set(k, v);
  f.Set("episodes", std::to_string(mark_every * marks));
  f.Set("checkpoint_every", std::to_string(mark_every));
  f.Set("seed", std::to_string(DeriveSeed(seed, combination, static_cast<uint64_t>(repetition))));
  return LearningConfig::FromFile(f);
}

std::string ExperimentSchedule::ToText() const {
  std::ostringstream out;
  for (const auto& [k, v] : base.values()) out << k << " = " << v << '\n';
  out << "experiment.combinations = ";
  for (size_t c = 0; c < combinations.size(); ++c) {
    out << (c ? ", " : "") << combinations[c].id;
  }
  out << '\n';
  for (const Combination& c : combinations) {
    out << kCombinationPrefix << c.id << " =";
    for (const auto& [k, v] : c.overrides) out << ' ' << k << '=' << v;
    out << '\n';
  }
  out << "experiment.mark_every = " << mark_every << '\n'
      << "experiment.marks = " << marks << '\n'
      << "experiment.repetitions = " << repetitions << '\n'
      << "experiment.eval = " << (eval == EvalMode::kGreedy ? "greedy" : "search") << '\n'
      << "experiment.eval_budget = " << eval_budget << '\n'
      << "experiment.matches_per_color = " << matches_per_color << '\n'
      << "experiment.random_opening = " << random_opening << '\n';
  return out.str();
}

std::string HeadToHeadCsv(const std::vector<HeadToHead>& rows) {
  std::string out = "combination,opponent,wins,draws,losses,matches,win_pct,ci95\n";
  for (const HeadToHead& h : rows) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f,%.4f", h.record.win_pct(), h.record.ci());
    out += h.combination + ',' + h.opponent + ',' + std::to_string(h.record.wins) + ',' +
           std::to_string(h.record.draws) + ',' + std::to_string(h.record.losses) + ',' +
           std::to_string(h.record.matches()) + ',' + buf + '\n';
  }
  return out;
}

namespace {

// A trained checkpoint made playable.
struct Contender {
  size_t combination;
  int repetition;
  int mark;
  std::unique_ptr<Evaluator> evaluator;
  std::unique_ptr<Agent> agent;
};

}  // namespace

ExperimentResult RunExperiment(const ExperimentSchedule& schedule, const std::string& out_dir,
                               std::ostream* log) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  nnet::WriteFileBytes((fs::path(out_dir) / "experiment.txt").string(), schedule.ToText());
  CheckpointRegistry registry((fs::path(out_dir) / "registry").string());
  ExperimentResult result;

  const size_t num_c = schedule.combinations.size();
  const int reps = schedule.repetitions;
  std::vector<LearningConfig> configs;
  std::vector<std::unique_ptr<TerminalEval>> f_t;
  // ids[c][rep][h] for marks h = 1..marks.
  std::vector<std::vector<std::vector<std::string>>> ids(num_c);
  std::unique_ptr<Game> game;
  for (size_t c = 0; c < num_c; ++c) {
    ids[c].resize(reps);
    for (int rep = 0; rep < reps; ++rep) {
      const LearningConfig cfg = schedule.ConfigFor(c, rep);
      if (rep == 0) configs.push_back(cfg);
      const std::string dir = (fs::path(out_dir) / "train" / schedule.combinations[c].id /
                               ("rep" + std::to_string(rep))).string();
      Trainer trainer(cfg, dir);
      const TrainSummary summary = trainer.Run();
      result.aborted_episodes += summary.aborted;
      for (const CheckpointInfo& ck : summary.checkpoints) {
        if (ck.episode == 0) continue;
        ids[c][rep].push_back(registry.Save(nnet::ReadFileBytes(ck.path), cfg.ToText(),
                                            schedule.combinations[c].id + "/rep" +
                                                std::to_string(rep) + "/" +
                                                std::to_string(ck.episode)));
      }
      if (log) {
        *log << "trained " << schedule.combinations[c].id << " rep " << rep << ": "
             << summary.episodes << " episodes, " << summary.aborted << " aborted\n";
      }
    }
  }
  game = MakeGame(configs[0].game);
  for (const LearningConfig& cfg : configs) {
    f_t.push_back(std::make_unique<TerminalEval>(*game, cfg.heuristic, cfg.normalize));
  }

  auto make_player = [&](size_t c, int rep, int mark) {
    Contender p{c, rep, mark, MakeEvaluator(*game, configs[c]), nullptr};
    p.evaluator->Load(registry.Load(ids[c][rep][mark - 1]));
    const std::string name = schedule.combinations[c].id + "/" + std::to_string(rep) + "@" +
                             std::to_string(mark * schedule.mark_every);
    if (schedule.eval == EvalMode::kGreedy) {
      p.agent = std::make_unique<GreedyAgent>(*game, *p.evaluator, *f_t[c], name);
    } else {
      SearchOptions opt = configs[c].search;
      opt.trace = nullptr;
      if (schedule.eval_budget > 0) opt.budget = Budget::Iterations(schedule.eval_budget);
      p.agent = std::make_unique<SearchAgent>(*game, *p.evaluator, *f_t[c], opt, name);
    }
    return p;
  };

  std::vector<Contender> finals;
  for (size_t c = 0; c < num_c; ++c) {
    for (int rep = 0; rep < reps; ++rep) finals.push_back(make_player(c, rep, schedule.marks));
  }
  MatchOptions mopt;
  mopt.random_opening = schedule.random_opening;
  const uint64_t eval_seed = DeriveSeed(schedule.seed, 0xe7a1);

  // Plays a both-color series between a and b; returns a's record.
  auto series = [&](Agent& a, Agent& b, uint64_t seed) {
    Standing s;
    for (int k = 0; k < schedule.matches_per_color; ++k) {
      const MatchRecord first = PlayMatch(a, b, *game, DeriveSeed(seed, 0, k), mopt);
      const MatchRecord second = PlayMatch(b, a, *game, DeriveSeed(seed, 1, k), mopt);
      s.Add(first.result);
      s.Add(-second.result);
      result.illegal_moves += first.illegal + second.illegal;
    }
    return s;
  };

  std::vector<std::vector<Standing>> h2h(num_c, std::vector<Standing>(num_c));
  for (int mark = 1; mark <= schedule.marks; ++mark) {
    for (size_t c = 0; c < num_c; ++c) {
      Standing total;
      for (int rep = 0; rep < reps; ++rep) {
        Contender fresh;
        Contender* player;
        if (mark == schedule.marks) {
          player = &finals[c * reps + rep];
        } else {
          fresh = make_player(c, rep, mark);
          player = &fresh;
        }
        for (const Contender& opp : finals) {
          if (&opp == player) continue;
          const Standing s =
              series(*player->agent, *opp.agent,
                     DeriveSeed(eval_seed, (mark * num_c + c) * reps + rep,
                                opp.combination * reps + opp.repetition));
          total.wins += s.wins;
          total.draws += s.draws;
          total.losses += s.losses;
          // Each cross pairing is counted once and mirrored.
          if (mark == schedule.marks && c < opp.combination) {
            Standing& h = h2h[c][opp.combination];
            h.wins += s.wins;
            h.draws += s.draws;
            h.losses += s.losses;
            Standing& m = h2h[opp.combination][c];
            m.wins += s.losses;
            m.draws += s.draws;
            m.losses += s.wins;
          }
        }
      }
      result.curves.push_back({mark * schedule.mark_every, schedule.combinations[c].id,
                               total.win_pct(), total.ci(), total.matches()});
      if (log) {
        *log << "mark " << mark * schedule.mark_every << ' ' << schedule.combinations[c].id
             << ' ' << total.win_pct() << "% +- " << total.ci() << '\n';
      }
    }
  }
  for (size_t c = 0; c < num_c; ++c) {
    for (size_t o = 0; o < num_c; ++o) {
      if (c == o) continue;
      result.head_to_head.push_back(
          {schedule.combinations[c].id, schedule.combinations[o].id, h2h[c][o]});
    }
  }
  EmitCurves(result.curves, (fs::path(out_dir) / "curves.csv").string());
  nnet::WriteFileBytes((fs::path(out_dir) / "head_to_head.csv").string(),
                       HeadToHeadCsv(result.head_to_head));
  return result;
}

}  // namespace descent
