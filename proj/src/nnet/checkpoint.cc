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

#include "descent/nnet/checkpoint.h"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace descent::nnet {
namespace {

constexpr char kMagic[8] = {'D', 'S', 'C', 'N', 'N', 'E', 'T', '\0'};

static_assert(std::endian::native == std::endian::little,
              "checkpoint code assumes a little-endian host");

template <typename V>
void Put(std::string& out, V value) {
  char buf[sizeof(V)];
  std::memcpy(buf, &value, sizeof(V));
  out.append(buf, sizeof(V));
}

class Reader {
 public:
  explicit Reader(const std::string& bytes) : bytes_(bytes) {}

  template <typename V>
  V Get() {
    Need(sizeof(V));
    V value;
    std::memcpy(&value, bytes_.data() + pos_, sizeof(V));
    pos_ += sizeof(V);
    return value;
  }

  std::string GetString(size_t n) {
    Need(n);
    std::string s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  void GetFloats(std::span<float> out) {
    Need(out.size() * sizeof(float));
    std::memcpy(out.data(), bytes_.data() + pos_, out.size() * sizeof(float));
    pos_ += out.size() * sizeof(float);
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  void Need(size_t n) const {
    if (bytes_.size() - pos_ < n) throw CheckpointError("truncated checkpoint");
  }

  const std::string& bytes_;
  size_t pos_ = 0;
};

std::string ReadHeader(Reader& in) {
  if (in.GetString(sizeof(kMagic)) != std::string(kMagic, sizeof(kMagic))) {
    throw CheckpointError("not a network checkpoint (bad magic)");
  }
  const uint32_t version = in.Get<uint32_t>();
  if (version != kCheckpointVersion) {
    throw CheckpointError("unsupported checkpoint version " + std::to_string(version));
  }
  const uint32_t len = in.Get<uint32_t>();
  if (len > (1u << 20)) throw CheckpointError("architecture descriptor too long");
  return in.GetString(len);
}

}  // namespace

std::string SerializeNetwork(const Network& net) {
  std::string out(kMagic, sizeof(kMagic));
  Put<uint32_t>(out, kCheckpointVersion);
  const std::string desc = net.architecture().Describe();
  Put<uint32_t>(out, static_cast<uint32_t>(desc.size()));
  out += desc;
  Put<uint64_t>(out, net.num_params());
  for (auto block : {net.params(), net.adam_m(), net.adam_v()}) {
    out.append(reinterpret_cast<const char*>(block.data()), block.size() * sizeof(float));
  }
  Put<int64_t>(out, net.step());
  return out;
}

std::string PeekArchitecture(const std::string& bytes) {
  Reader in(bytes);
  return ReadHeader(in);
}

Network DeserializeNetwork(const std::string& bytes) {
  Reader in(bytes);
  const std::string desc = ReadHeader(in);
  Architecture arch;
  try {
    arch = Architecture::Parse(desc);
  } catch (const std::invalid_argument& e) {
    throw CheckpointError(std::string("bad architecture in checkpoint: ") + e.what());
  }
  Network net(arch, Init::kZero, 0);
  const uint64_t count = in.Get<uint64_t>();
  if (count != net.num_params()) {
    throw CheckpointError("parameter count " + std::to_string(count) +
                          " does not match architecture (" +
                          std::to_string(net.num_params()) + ")");
  }
  in.GetFloats(net.params());
  in.GetFloats(net.adam_m());
  in.GetFloats(net.adam_v());
  net.set_step(in.Get<int64_t>());
  if (!in.done()) throw CheckpointError("trailing bytes after checkpoint");
  return net;
}

std::string ReadFileBytes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CheckpointError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void WriteFileBytes(const std::string& path, const std::string& bytes) {
  // Write then rename so that an interrupted run never leaves half a file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw CheckpointError("cannot write " + tmp);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw CheckpointError("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void SaveNetwork(const Network& net, const std::string& path) {
  WriteFileBytes(path, SerializeNetwork(net));
}

Network LoadNetwork(const std::string& path) {
  return DeserializeNetwork(ReadFileBytes(path));
}

}  // namespace descent::nnet
