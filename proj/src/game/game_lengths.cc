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

#include "descent/game/game_lengths.h"

namespace descent {

double ApproximateGameLength(GameKind kind, int size) {
  switch (kind) {
    case GameKind::kOthello: {
      static constexpr double kLengths[] = {0, 0, 0, 0, 12.46, 0, 32.44, 0, 60.47};
      return kLengths[size];
    }
    case GameKind::kBreakthrough: {
      static constexpr double kLengths[] = {0, 0, 0, 0, 0, 16.04, 28.32, 44.37, 64.53};
      return kLengths[size];
    }
    case GameKind::kClobber: {
      static constexpr double kLengths[] = {0, 0, 0, 0, 10.02, 15.71, 22.82, 31.33, 41.16};
      return kLengths[size];
    }
    default:
      return 0;
  }
}

}  // namespace descent
