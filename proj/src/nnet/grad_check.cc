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

#include <algorithm>
#include <numeric>
#include <random>

#include "descent/nnet/network.h"

namespace descent::nnet {

GradCheckResult GradCheck(const Network& net, std::span<const float> inputs,
                          std::span<const float> targets, int batch, double l2,
                          uint64_t seed, int sample, double step) {
  BasicNetwork<double> wide(net);
  std::vector<double> y(targets.begin(), targets.end());
  std::vector<double> analytic;
  wide.LossAndGradient(inputs, y, batch, l2, analytic);

  std::vector<size_t> order(wide.num_params());
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(std::min(order.size(), static_cast<size_t>(sample)));

  auto total_loss = [&]() {
    std::vector<double> unused;
    return wide.LossAndGradient(inputs, y, batch, 0.0, unused) +
           l2 * wide.L2Norm() * wide.L2Norm();
  };

  GradCheckResult result;
  for (size_t i : order) {
    const double saved = wide.params()[i];
    wide.params()[i] = saved + step;
    const double up = total_loss();
    wide.params()[i] = saved - step;
    const double down = total_loss();
    wide.params()[i] = saved;
    const double numeric = (up - down) / (2 * step);
    const double a = analytic[i];
    const double scale = std::max(std::abs(a), std::abs(numeric));
    // Both (nearly) zero: nothing to compare.
    const double rel = scale < 1e-10 ? 0.0 : std::abs(a - numeric) / scale;
    result.max_relative_error = std::max(result.max_relative_error, rel);
    ++result.checked;
  }
  return result;
}

}  // namespace descent::nnet
