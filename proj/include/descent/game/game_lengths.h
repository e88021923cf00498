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

#ifndef DESCENT_GAME_GAME_LENGTHS_H_
#define DESCENT_GAME_GAME_LENGTHS_H_

#include "descent/game/game.h"

namespace descent {

// Approximate maximum game length used by the depth heuristics for games
// without a tight bound: the mean length of 1000 uniformly random games
// (EstimateMeanGameLength, seed 2021), rounded to two decimals. Regenerate
// with `descent export --game-lengths`.
double ApproximateGameLength(GameKind kind, int size);

}  // namespace descent

#endif  // DESCENT_GAME_GAME_LENGTHS_H_
