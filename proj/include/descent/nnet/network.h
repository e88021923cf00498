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

#ifndef DESCENT_NNET_NETWORK_H_
#define DESCENT_NNET_NETWORK_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent/nnet/architecture.h"

namespace descent::nnet {

struct TrainConfig {
  int batch_size = 128;
  double l2 = 0.001;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct TrainStats {
  double mean_squared_error = 0;  // before each batch's update
  int steps = 0;
  int samples = 0;
};

class NonFiniteLoss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Init { kHeUniform, kZero };

struct Shape3 {
  int c = 0, h = 0, w = 0;
  int size() const { return c * h * w; }
};

// Scalar-output feed-forward network over plane tensors: conv2d, dense,
// relu and tanh layers, trained with Adam on a mean squared error plus an
// explicit L2 penalty on every parameter.
//
// The scalar type is a template parameter so that the gradient check can
// run the very same code in double precision; production networks use
// float. Parameters, Adam moments and step counter form the full state.
template <typename T>
class BasicNetwork {
 public:
  BasicNetwork(Architecture arch, Init init, uint64_t seed)
      : arch_(std::move(arch)) {
    Plan();
    params_.assign(num_params_, T(0));
    m_.assign(num_params_, T(0));
    v_.assign(num_params_, T(0));
    if (init == Init::kHeUniform) InitHe(seed);
  }

  // Copies another precision's network, casting every parameter.
  template <typename U>
  explicit BasicNetwork(const BasicNetwork<U>& other)
      : BasicNetwork(other.architecture(), Init::kZero, 0) {
    for (size_t i = 0; i < num_params_; ++i) {
      params_[i] = static_cast<T>(other.params()[i]);
      m_[i] = static_cast<T>(other.adam_m()[i]);
      v_[i] = static_cast<T>(other.adam_v()[i]);
    }
    step_ = other.step();
  }

  const Architecture& architecture() const { return arch_; }
  size_t num_params() const { return num_params_; }
  int input_size() const { return arch_.input.size(); }
  std::span<T> params() { return params_; }
  std::span<const T> params() const { return params_; }
  std::span<T> adam_m() { return m_; }
  std::span<const T> adam_m() const { return m_; }
  std::span<T> adam_v() { return v_; }
  std::span<const T> adam_v() const { return v_; }
  int64_t step() const { return step_; }
  void set_step(int64_t step) { step_ = step; }

  // One value per batch element. inputs holds batch * input_size() floats.
  std::vector<T> Forward(std::span<const float> inputs, int batch) const {
    CheckInputs(inputs, batch);
    std::vector<std::vector<T>> acts;
    RunForward(inputs, batch, acts);
    return std::move(acts.back());
  }

  // Batch loss mean((f - y)^2) + l2 * |theta|^2 and its gradient with
  // respect to every parameter. Returns the data term only.
  double LossAndGradient(std::span<const float> inputs, std::span<const T> targets,
                         int batch, double l2, std::vector<T>& grad) const {
    CheckInputs(inputs, batch);
    if (static_cast<int>(targets.size()) != batch) {
      throw std::invalid_argument("target count does not match batch size");
    }
    std::vector<std::vector<T>> acts;
    RunForward(inputs, batch, acts);
    grad.assign(num_params_, T(0));
    const std::vector<T>& out = acts.back();
    std::vector<T> delta(static_cast<size_t>(batch));
    double loss = 0;
    for (int b = 0; b < batch; ++b) {
      const T diff = out[b] - targets[b];
      loss += static_cast<double>(diff) * static_cast<double>(diff);
      delta[b] = T(2) * diff / static_cast<T>(batch);
    }
    loss /= batch;
    RunBackward(inputs, batch, acts, delta, grad);
    if (l2 > 0) {
      for (size_t i = 0; i < num_params_; ++i) {
        grad[i] += static_cast<T>(2 * l2) * params_[i];
      }
    }
    return loss;
  }

  double L2Norm() const {
    double sum = 0;
    for (T p : params_) sum += static_cast<double>(p) * static_cast<double>(p);
    return std::sqrt(sum);
  }

  // One Adam step on an already computed gradient.
  void AdamStep(std::span<const T> grad, const TrainConfig& cfg) {
    ++step_;
    const double c1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(step_));
    const double c2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(step_));
    const T b1 = static_cast<T>(cfg.beta1), b2 = static_cast<T>(cfg.beta2);
    for (size_t i = 0; i < num_params_; ++i) {
      m_[i] = b1 * m_[i] + (T(1) - b1) * grad[i];
      v_[i] = b2 * v_[i] + (T(1) - b2) * grad[i] * grad[i];
      const double mhat = static_cast<double>(m_[i]) / c1;
      const double vhat = static_cast<double>(v_[i]) / c2;
      params_[i] -= static_cast<T>(cfg.learning_rate * mhat /
                                   (std::sqrt(vhat) + cfg.epsilon));
    }
  }

  // Splits the data in consecutive batches of cfg.batch_size (the last one
  // may be smaller) and takes one Adam step per batch.
  TrainStats TrainStep(std::span<const float> inputs, std::span<const T> targets,
                       const TrainConfig& cfg) {
    if (cfg.batch_size < 1 || cfg.l2 < 0) {
      throw std::invalid_argument("batch size must be >= 1 and l2 >= 0");
    }
    const int total = static_cast<int>(targets.size());
    if (total == 0) throw std::invalid_argument("empty training set");
    CheckInputs(inputs, total);
    TrainStats stats;
    std::vector<T> grad;
    double sse = 0;
    for (int start = 0; start < total; start += cfg.batch_size) {
      const int n = std::min(cfg.batch_size, total - start);
      const auto in = inputs.subspan(static_cast<size_t>(start) * input_size(),
                                     static_cast<size_t>(n) * input_size());
      const auto tg = targets.subspan(static_cast<size_t>(start), static_cast<size_t>(n));
      const double loss = LossAndGradient(in, tg, n, cfg.l2, grad);
      if (!std::isfinite(loss) || !AllFinite(grad)) {
        double max_param = 0, max_target = 0;
        for (T p : params_) max_param = std::max(max_param, std::abs(static_cast<double>(p)));
        for (T t : targets) max_target = std::max(max_target, std::abs(static_cast<double>(t)));
        throw NonFiniteLoss("non-finite loss at optimizer step " +
                            std::to_string(step_ + 1) + ": max |theta| = " +
                            std::to_string(max_param) + ", max |target| = " +
                            std::to_string(max_target));
      }
      sse += loss * n;
      AdamStep(grad, cfg);
      ++stats.steps;
    }
    stats.samples = total;
    stats.mean_squared_error = sse / total;
    return stats;
  }

 private:
  struct LayerPlan {
    Shape3 in, out;
    size_t weights = 0;  // offset of the weight block
    size_t bias = 0;     // offset of the bias block
  };

  static bool AllFinite(const std::vector<T>& values) {
    for (T v : values) {
      if (!std::isfinite(static_cast<double>(v))) return false;
    }
    return true;
  }

  void CheckInputs(std::span<const float> inputs, int batch) const {
    const size_t expected = static_cast<size_t>(batch) * input_size();
    if (inputs.size() != expected) {
      throw std::invalid_argument(
          "input shape mismatch: expected " + std::to_string(batch) + " x " +
          std::to_string(arch_.input.planes) + "x" + std::to_string(arch_.input.height) +
          "x" + std::to_string(arch_.input.width) + " (" + std::to_string(expected) +
          " values), got " + std::to_string(inputs.size()) + " values");
    }
  }

  void Plan() {
    Shape3 shape{arch_.input.planes, arch_.input.height, arch_.input.width};
    if (shape.size() <= 0) throw std::invalid_argument("empty input shape");
    size_t offset = 0;
    for (const LayerSpec& spec : arch_.layers) {
      LayerPlan plan;
      plan.in = shape;
      switch (spec.kind) {
        case LayerKind::kConv2d: {
          const int shrink = spec.same_padding ? 0 : spec.kernel - 1;
          if (spec.kernel < 1 || spec.units < 1 || (spec.same_padding && spec.kernel % 2 == 0)) {
            throw std::invalid_argument("bad conv layer in " + arch_.Describe());
          }
          plan.out = {spec.units, shape.h - shrink, shape.w - shrink};
          if (plan.out.h < 1 || plan.out.w < 1) {
            throw std::invalid_argument("convolution shrinks below 1x1 in " + arch_.Describe());
          }
          plan.weights = offset;
          offset += static_cast<size_t>(spec.units) * shape.c * spec.kernel * spec.kernel;
          plan.bias = offset;
          offset += static_cast<size_t>(spec.units);
          break;
        }
        case LayerKind::kDense:
          if (spec.units < 1) throw std::invalid_argument("bad dense layer");
          plan.out = {spec.units, 1, 1};
          plan.weights = offset;
          offset += static_cast<size_t>(spec.units) * shape.size();
          plan.bias = offset;
          offset += static_cast<size_t>(spec.units);
          break;
        case LayerKind::kRelu:
        case LayerKind::kTanh:
          plan.out = shape;
          break;
      }
      shape = plan.out;
      plans_.push_back(plan);
    }
    if (shape.size() != 1) {
      throw std::invalid_argument("network must end with a single output: " + arch_.Describe());
    }
    num_params_ = offset;
  }

  void InitHe(uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (size_t l = 0; l < plans_.size(); ++l) {
      const LayerSpec& spec = arch_.layers[l];
      if (spec.kind != LayerKind::kConv2d && spec.kind != LayerKind::kDense) continue;
      const LayerPlan& plan = plans_[l];
      const int fan_in = spec.kind == LayerKind::kConv2d
                             ? plan.in.c * spec.kernel * spec.kernel
                             : plan.in.size();
      const double limit = std::sqrt(6.0 / fan_in);
      std::uniform_real_distribution<double> dist(-limit, limit);
      for (size_t i = plan.weights; i < plan.bias; ++i) params_[i] = static_cast<T>(dist(rng));
    }
  }

  void RunForward(std::span<const float> inputs, int batch,
                  std::vector<std::vector<T>>& acts) const {
    acts.resize(plans_.size());
    std::vector<T> first;
    const T* in = nullptr;
    if constexpr (std::is_same_v<T, float>) {
      in = inputs.data();
    } else {
      first.assign(inputs.begin(), inputs.end());
      in = first.data();
    }
    for (size_t l = 0; l < plans_.size(); ++l) {
      const LayerSpec& spec = arch_.layers[l];
      const LayerPlan& plan = plans_[l];
      std::vector<T>& out = acts[l];
      out.assign(static_cast<size_t>(batch) * plan.out.size(), T(0));
      const int in_size = plan.in.size(), out_size = plan.out.size();
      for (int b = 0; b < batch; ++b) {
        const T* x = in + static_cast<size_t>(b) * in_size;
        T* y = out.data() + static_cast<size_t>(b) * out_size;
        switch (spec.kind) {
          case LayerKind::kConv2d: ConvForward(spec, plan, x, y); break;
          case LayerKind::kDense: DenseForward(plan, x, y); break;
          case LayerKind::kRelu:
            for (int i = 0; i < out_size; ++i) y[i] = x[i] > T(0) ? x[i] : T(0);
            break;
          case LayerKind::kTanh:
            for (int i = 0; i < out_size; ++i) y[i] = std::tanh(x[i]);
            break;
        }
      }
      in = out.data();
    }
  }

  void RunBackward(std::span<const float> inputs, int batch,
                   const std::vector<std::vector<T>>& acts, std::vector<T> delta,
                   std::vector<T>& grad) const {
    std::vector<T> first;
    if constexpr (!std::is_same_v<T, float>) first.assign(inputs.begin(), inputs.end());
    for (size_t l = plans_.size(); l-- > 0;) {
      const LayerSpec& spec = arch_.layers[l];
      const LayerPlan& plan = plans_[l];
      const T* in_all = nullptr;
      if (l > 0) {
        in_all = acts[l - 1].data();
      } else if constexpr (std::is_same_v<T, float>) {
        in_all = inputs.data();
      } else {
        in_all = first.data();
      }
      const int in_size = plan.in.size(), out_size = plan.out.size();
      std::vector<T> prev(static_cast<size_t>(batch) * in_size, T(0));
      for (int b = 0; b < batch; ++b) {
        const T* x = in_all + static_cast<size_t>(b) * in_size;
        const T* y = acts[l].data() + static_cast<size_t>(b) * out_size;
        const T* dy = delta.data() + static_cast<size_t>(b) * out_size;
        T* dx = prev.data() + static_cast<size_t>(b) * in_size;
        switch (spec.kind) {
          case LayerKind::kConv2d: ConvBackward(spec, plan, x, dy, dx, grad); break;
          case LayerKind::kDense: DenseBackward(plan, x, dy, dx, grad); break;
          case LayerKind::kRelu:
            for (int i = 0; i < out_size; ++i) dx[i] = x[i] > T(0) ? dy[i] : T(0);
            break;
          case LayerKind::kTanh:
            for (int i = 0; i < out_size; ++i) dx[i] = dy[i] * (T(1) - y[i] * y[i]);
            break;
        }
      }
      delta = std::move(prev);
    }
  }

  void DenseForward(const LayerPlan& plan, const T* x, T* y) const {
    const int n_in = plan.in.size();
    const T* w = params_.data() + plan.weights;
    const T* bias = params_.data() + plan.bias;
    for (int o = 0; o < plan.out.c; ++o) {
      T acc = bias[o];
      const T* row = w + static_cast<size_t>(o) * n_in;
      for (int i = 0; i < n_in; ++i) acc += row[i] * x[i];
      y[o] = acc;
    }
  }

  void DenseBackward(const LayerPlan& plan, const T* x, const T* dy, T* dx,
                     std::vector<T>& grad) const {
    const int n_in = plan.in.size();
    const T* w = params_.data() + plan.weights;
    T* gw = grad.data() + plan.weights;
    T* gb = grad.data() + plan.bias;
    for (int o = 0; o < plan.out.c; ++o) {
      const T d = dy[o];
      gb[o] += d;
      const T* row = w + static_cast<size_t>(o) * n_in;
      T* grow = gw + static_cast<size_t>(o) * n_in;
      for (int i = 0; i < n_in; ++i) {
        grow[i] += d * x[i];
        dx[i] += d * row[i];
      }
    }
  }

  void ConvForward(const LayerSpec& spec, const LayerPlan& plan, const T* x, T* y) const {
    const int k = spec.kernel;
    const int pad = spec.same_padding ? k / 2 : 0;
    const Shape3 in = plan.in, out = plan.out;
    const T* w = params_.data() + plan.weights;
    const T* bias = params_.data() + plan.bias;
    for (int o = 0; o < out.c; ++o) {
      T* plane = y + static_cast<size_t>(o) * out.h * out.w;
      std::fill(plane, plane + out.h * out.w, bias[o]);
      for (int c = 0; c < in.c; ++c) {
        const T* src = x + static_cast<size_t>(c) * in.h * in.w;
        const T* kern = w + (static_cast<size_t>(o) * in.c + c) * k * k;
        for (int ky = 0; ky < k; ++ky) {
          for (int kx = 0; kx < k; ++kx) {
            const T wt = kern[ky * k + kx];
            for (int oy = 0; oy < out.h; ++oy) {
              const int iy = oy + ky - pad;
              if (iy < 0 || iy >= in.h) continue;
              for (int ox = 0; ox < out.w; ++ox) {
                const int ix = ox + kx - pad;
                if (ix < 0 || ix >= in.w) continue;
                plane[oy * out.w + ox] += wt * src[iy * in.w + ix];
              }
            }
          }
        }
      }
    }
  }

  void ConvBackward(const LayerSpec& spec, const LayerPlan& plan, const T* x,
                    const T* dy, T* dx, std::vector<T>& grad) const {
    const int k = spec.kernel;
    const int pad = spec.same_padding ? k / 2 : 0;
    const Shape3 in = plan.in, out = plan.out;
    const T* w = params_.data() + plan.weights;
    T* gw = grad.data() + plan.weights;
    T* gb = grad.data() + plan.bias;
    for (int o = 0; o < out.c; ++o) {
      const T* dplane = dy + static_cast<size_t>(o) * out.h * out.w;
      for (int i = 0; i < out.h * out.w; ++i) gb[o] += dplane[i];
      for (int c = 0; c < in.c; ++c) {
        const T* src = x + static_cast<size_t>(c) * in.h * in.w;
        T* dsrc = dx + static_cast<size_t>(c) * in.h * in.w;
        const size_t kbase = (static_cast<size_t>(o) * in.c + c) * k * k;
        for (int ky = 0; ky < k; ++ky) {
          for (int kx = 0; kx < k; ++kx) {
            const T wt = w[kbase + ky * k + kx];
            T gsum = T(0);
            for (int oy = 0; oy < out.h; ++oy) {
              const int iy = oy + ky - pad;
              if (iy < 0 || iy >= in.h) continue;
              for (int ox = 0; ox < out.w; ++ox) {
                const int ix = ox + kx - pad;
                if (ix < 0 || ix >= in.w) continue;
                const T d = dplane[oy * out.w + ox];
                gsum += d * src[iy * in.w + ix];
                dsrc[iy * in.w + ix] += d * wt;
              }
            }
            gw[kbase + ky * k + kx] += gsum;
          }
        }
      }
    }
  }

  Architecture arch_;
  std::vector<LayerPlan> plans_;
  size_t num_params_ = 0;
  std::vector<T> params_;
  std::vector<T> m_;
  std::vector<T> v_;
  int64_t step_ = 0;
};

using Network = BasicNetwork<float>;

struct GradCheckResult {
  double max_relative_error = 0;
  int checked = 0;
};

// Compares the analytic gradient of the batch loss (data + L2) with central
// finite differences on a random subset of parameters, in double precision.
GradCheckResult GradCheck(const Network& net, std::span<const float> inputs,
                          std::span<const float> targets, int batch, double l2,
                          uint64_t seed, int sample = 100, double step = 1e-5);

}  // namespace descent::nnet

#endif  // DESCENT_NNET_NETWORK_H_
