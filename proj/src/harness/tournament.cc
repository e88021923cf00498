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

#include "descent/harness/tournament.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "descent/nnet/checkpoint.h"

namespace descent {
namespace {

uint64_t SplitMix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string Fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

}  // namespace

uint64_t DeriveSeed(uint64_t master, uint64_t a, uint64_t b, uint64_t c) {
  return SplitMix(SplitMix(SplitMix(SplitMix(master) ^ a) ^ b) ^ c);
}

double ConfidenceHalfWidth(double p, int64_t matches) {
  if (matches <= 0) return 0;
  return 1.96 * std::sqrt(p * (1 - p) / static_cast<double>(matches)) * 100;
}

double Standing::win_pct() const {
  return matches() == 0 ? 0 : 100 * score() / static_cast<double>(matches());
}

double Standing::ci() const { return ConfidenceHalfWidth(win_pct() / 100, matches()); }

void Standing::Add(int gain) {
  if (gain > 0) {
    ++wins;
  } else if (gain < 0) {
    ++losses;
  } else {
    ++draws;
  }
}

TournamentResult RoundRobin(std::span<Agent* const> entrants, const Game& game,
                            int matches_per_color, uint64_t seed, const MatchOptions& options) {
  if (entrants.size() < 2) throw std::invalid_argument("round robin needs two entrants");
  const size_t n = entrants.size();
  TournamentResult out;
  out.standings.resize(n);
  out.pairwise.assign(n, std::vector<Standing>(n));
  for (size_t i = 0; i < n; ++i) {
    out.standings[i].name = entrants[i]->Name();
    for (size_t j = 0; j < n; ++j) out.pairwise[i][j].name = entrants[j]->Name();
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < matches_per_color; ++k) {
        MatchRecord rec = PlayMatch(*entrants[i], *entrants[j], game,
                                    DeriveSeed(seed, i, j, static_cast<uint64_t>(k)), options);
        out.standings[i].Add(rec.result);
        out.standings[j].Add(-rec.result);
        out.pairwise[i][j].Add(rec.result);
        out.pairwise[j][i].Add(-rec.result);
        if (rec.illegal) ++out.illegal;
        out.matches.push_back(std::move(rec));
      }
    }
  }
  return out;
}

std::string CurvesCsv(std::vector<CurvePoint> points) {
  std::stable_sort(points.begin(), points.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return std::tie(a.combination, a.mark) < std::tie(b.combination, b.mark);
  });
  std::string out = "mark,combination,win_pct,ci95,matches,sma6\n";
  std::vector<double> window;
  for (size_t i = 0; i < points.size(); ++i) {
    const CurvePoint& p = points[i];
    if (i == 0 || points[i - 1].combination != p.combination) window.clear();
    window.push_back(p.win_pct);
    std::string sma;
    if (window.size() >= kSmaWindow) {
      double sum = 0;
      for (size_t k = window.size() - kSmaWindow; k < window.size(); ++k) sum += window[k];
      sma = Fixed(sum / kSmaWindow, 4);
    }
    out += std::to_string(p.mark) + ',' + p.combination + ',' + Fixed(p.win_pct, 4) + ',' +
           Fixed(p.ci, 4) + ',' + std::to_string(p.matches) + ',' + sma + '\n';
  }
  return out;
}

void EmitCurves(const std::vector<CurvePoint>& points, const std::string& path) {
  nnet::WriteFileBytes(path, CurvesCsv(points));
}

std::string StandingsCsv(const std::vector<Standing>& standings) {
  std::string out = "name,wins,draws,losses,matches,win_pct,ci95\n";
  for (const Standing& s : standings) {
    out += s.name + ',' + std::to_string(s.wins) + ',' + std::to_string(s.draws) + ',' +
           std::to_string(s.losses) + ',' + std::to_string(s.matches()) + ',' +
           Fixed(s.win_pct(), 4) + ',' + Fixed(s.ci(), 4) + '\n';
  }
  return out;
}

}  // namespace descent
