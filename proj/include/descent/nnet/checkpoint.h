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

#ifndef DESCENT_NNET_CHECKPOINT_H_
#define DESCENT_NNET_CHECKPOINT_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "descent/nnet/network.h"

namespace descent::nnet {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary layout, little-endian:
//   "DSCNNET\0"  u32 version  u32 n  n bytes of architecture descriptor
//   u64 count  count x f32 params  count x f32 adam m  count x f32 adam v
//   i64 step
inline constexpr uint32_t kCheckpointVersion = 1;

std::string SerializeNetwork(const Network& net);
Network DeserializeNetwork(const std::string& bytes);

void SaveNetwork(const Network& net, const std::string& path);
Network LoadNetwork(const std::string& path);

// Reads only the architecture descriptor from a checkpoint.
std::string PeekArchitecture(const std::string& bytes);

std::string ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, const std::string& bytes);

}  // namespace descent::nnet

#endif  // DESCENT_NNET_CHECKPOINT_H_
