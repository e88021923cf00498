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

#ifndef DESCENT_HARNESS_TOURNAMENT_H_
#define DESCENT_HARNESS_TOURNAMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "descent/harness/match.h"

namespace descent {

// Independent 64-bit stream seed for a (master, a, b, c) coordinate.
uint64_t DeriveSeed(uint64_t master, uint64_t a, uint64_t b = 0, uint64_t c = 0);

// Binomial 95% half-width in percentage points.
double ConfidenceHalfWidth(double p, int64_t matches);

struct Standing {
  std::string name;
  int64_t wins = 0;
  int64_t draws = 0;
  int64_t losses = 0;
  int64_t matches() const { return wins + draws + losses; }
  // Draws count half.
  double score() const { return static_cast<double>(wins) + 0.5 * static_cast<double>(draws); }
  double win_pct() const;
  double ci() const;
  void Add(int gain);  // gain from this entrant's side
};

struct TournamentResult {
  std::vector<Standing> standings;
  // pairwise[i][j]: entrant i's record against j, both colors.
  std::vector<std::vector<Standing>> pairwise;
  std::vector<MatchRecord> matches;
  int64_t illegal = 0;
};

// All-play-all: every ordered pair plays matches_per_color games with each
// entrant as first player.
TournamentResult RoundRobin(std::span<Agent* const> entrants, const Game& game,
                            int matches_per_color, uint64_t seed,
                            const MatchOptions& options = {});

struct CurvePoint {
  int64_t mark = 0;
  std::string combination;
  double win_pct = 0;
  double ci = 0;
  int64_t matches = 0;
};

inline constexpr int kSmaWindow = 6;

// Columns: mark, combination, win_pct, ci95, matches, sma6. Rows sorted by
// (combination, mark); sma6 is empty until six marks are available.
std::string CurvesCsv(std::vector<CurvePoint> points);
void EmitCurves(const std::vector<CurvePoint>& points, const std::string& path);

std::string StandingsCsv(const std::vector<Standing>& standings);

}  // namespace descent

#endif  // DESCENT_HARNESS_TOURNAMENT_H_
