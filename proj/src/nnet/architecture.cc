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

#include "descent/nnet/architecture.h"

#include <sstream>
#include <stdexcept>

namespace descent::nnet {
namespace {

Architecture Convolutional(PlaneShape input, bool tanh_output, int convs,
                           int filters, int hidden) {
  Architecture arch;
  arch.input = input;
  int h = input.height, w = input.width;
  for (int i = 0; i < convs; ++i) {
    const bool same = h < 3 || w < 3;
    arch.layers.push_back({LayerKind::kConv2d, filters, 3, same});
    arch.layers.push_back({LayerKind::kRelu});
    if (!same) {
      h -= 2;
      w -= 2;
    }
  }
  arch.layers.push_back({LayerKind::kDense, hidden});
  arch.layers.push_back({LayerKind::kRelu});
  arch.layers.push_back({LayerKind::kDense, 1});
  if (tanh_output) arch.layers.push_back({LayerKind::kTanh});
  return arch;
}

int ParseInt(std::string_view text, const std::string& token) {
  if (text.empty()) throw std::invalid_argument("bad layer token: " + token);
  int v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad layer token: " + token);
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

std::string Architecture::Describe() const {
  std::string out = "in" + std::to_string(input.planes) + "x" +
                    std::to_string(input.height) + "x" +
                    std::to_string(input.width);
  for (const LayerSpec& layer : layers) {
    out += ' ';
    switch (layer.kind) {
      case LayerKind::kConv2d:
        out += "conv" + std::to_string(layer.kernel) + "x" +
               std::to_string(layer.kernel) + "x" + std::to_string(layer.units);
        if (layer.same_padding) out += 's';
        break;
      case LayerKind::kDense:
        out += "dense" + std::to_string(layer.units);
        break;
      case LayerKind::kRelu:
        out += "relu";
        break;
      case LayerKind::kTanh:
        out += "tanh";
        break;
    }
  }
  return out;
}

Architecture Architecture::Parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  Architecture arch;
  bool have_input = false;
  while (in >> token) {
    std::string_view t = token;
    if (!have_input) {
      if (!t.starts_with("in")) throw std::invalid_argument("architecture must start with inCxHxW");
      t.remove_prefix(2);
      const auto x1 = t.find('x');
      const auto x2 = t.find('x', x1 + 1);
      if (x1 == std::string_view::npos || x2 == std::string_view::npos) {
        throw std::invalid_argument("bad input token: " + token);
      }
      arch.input = {ParseInt(t.substr(0, x1), token),
                    ParseInt(t.substr(x1 + 1, x2 - x1 - 1), token),
                    ParseInt(t.substr(x2 + 1), token)};
      have_input = true;
    } else if (t == "relu") {
      arch.layers.push_back({LayerKind::kRelu});
    } else if (t == "tanh") {
      arch.layers.push_back({LayerKind::kTanh});
    } else if (t.starts_with("dense")) {
      arch.layers.push_back({LayerKind::kDense, ParseInt(t.substr(5), token)});
    } else if (t.starts_with("conv")) {
      t.remove_prefix(4);
      LayerSpec spec{LayerKind::kConv2d};
      if (t.ends_with('s')) {
        spec.same_padding = true;
        t.remove_suffix(1);
      }
      const auto x1 = t.find('x');
      const auto x2 = t.find('x', x1 + 1);
      if (x1 == std::string_view::npos || x2 == std::string_view::npos) {
        throw std::invalid_argument("bad conv token: " + token);
      }
      spec.kernel = ParseInt(t.substr(0, x1), token);
      if (ParseInt(t.substr(x1 + 1, x2 - x1 - 1), token) != spec.kernel) {
        throw std::invalid_argument("only square kernels are supported: " + token);
      }
      spec.units = ParseInt(t.substr(x2 + 1), token);
      arch.layers.push_back(spec);
    } else {
      throw std::invalid_argument("unknown layer token: " + token);
    }
  }
  if (!have_input) throw std::invalid_argument("empty architecture");
  return arch;
}

Architecture Architecture::Desk(PlaneShape input, bool tanh_output) {
  return Convolutional(input, tanh_output, 2, 16, 64);
}

Architecture Architecture::Large(PlaneShape input, bool tanh_output) {
  return Convolutional(input, tanh_output, 3, 64, 100);
}

}  // namespace descent::nnet
