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

#ifndef DESCENT_NNET_ARCHITECTURE_H_
#define DESCENT_NNET_ARCHITECTURE_H_

#include <string>
#include <string_view>
#include <vector>

#include "descent/game/game.h"

namespace descent::nnet {

enum class LayerKind { kConv2d, kDense, kRelu, kTanh };

struct LayerSpec {
  LayerKind kind = LayerKind::kDense;
  int units = 0;          // filters for conv2d, neurons for dense
  int kernel = 0;         // conv2d only
  bool same_padding = false;  // conv2d only; default is valid (no padding)
  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

// Layer stack of a scalar evaluator. Text form, e.g.
//   "in3x7x7 conv3x3x16 relu conv3x3x16 relu dense64 relu dense1 tanh"
// ("conv3x3x16s" selects same padding). The last dense layer must have one
// unit, optionally followed by tanh.
struct Architecture {
  PlaneShape input;
  std::vector<LayerSpec> layers;

  std::string Describe() const;
  static Architecture Parse(std::string_view text);

  bool tanh_output() const {
    return !layers.empty() && layers.back().kind == LayerKind::kTanh;
  }

  // Two 3x3 convolutions of 16 filters, a 64-unit hidden layer and a
  // scalar output. Convolutions fall back to same padding when the board is
  // too small for valid ones.
  static Architecture Desk(PlaneShape input, bool tanh_output);
  // Three 3x3 convolutions of 64 filters and a 100-unit hidden layer.
  static Architecture Large(PlaneShape input, bool tanh_output);

  friend bool operator==(const Architecture&, const Architecture&) = default;
};

}  // namespace descent::nnet

#endif  // DESCENT_NNET_ARCHITECTURE_H_
