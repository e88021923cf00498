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

#include "descent/harness/registry.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "descent/nnet/checkpoint.h"

namespace descent {

CheckpointRegistry::CheckpointRegistry(std::string dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string CheckpointRegistry::ContentId(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string CheckpointRegistry::Path(const std::string& id, const char* suffix) const {
  return (std::filesystem::path(dir_) / (id + suffix)).string();
}

std::vector<CheckpointRegistry::Entry> CheckpointRegistry::ReadIndex() const {
  std::vector<Entry> out;
  std::ifstream in(std::filesystem::path(dir_) / "index.tsv");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    out.push_back({line.substr(0, tab), tab == std::string::npos ? "" : line.substr(tab + 1)});
  }
  return out;
}

std::string CheckpointRegistry::Save(const std::string& bytes, const std::string& config_text,
                                     const std::string& label) {
  const std::string id = ContentId(bytes);
  for (const Entry& e : ReadIndex()) {
    if (e.id == id) return id;
  }
  nnet::WriteFileBytes(Path(id, ".bin"), bytes);
  nnet::WriteFileBytes(Path(id, ".config.txt"), config_text);
  std::ofstream(std::filesystem::path(dir_) / "index.tsv", std::ios::app)
      << id << '\t' << label << '\n';
  return id;
}

std::string CheckpointRegistry::Load(const std::string& id,
                                     const std::string& expected_architecture) const {
  if (!std::filesystem::exists(Path(id, ".bin"))) {
    throw nnet::CheckpointError("unknown checkpoint id " + id);
  }
  std::string bytes = nnet::ReadFileBytes(Path(id, ".bin"));
  if (ContentId(bytes) != id) throw nnet::CheckpointError("checkpoint " + id + " was modified");
  if (!expected_architecture.empty()) {
    const std::string arch = nnet::PeekArchitecture(bytes);
    if (arch != expected_architecture) {
      throw nnet::CheckpointError("checkpoint " + id + " has architecture '" + arch +
                                  "', expected '" + expected_architecture + "'");
    }
  }
  return bytes;
}

std::string CheckpointRegistry::Config(const std::string& id) const {
  return nnet::ReadFileBytes(Path(id, ".config.txt"));
}

std::string CheckpointRegistry::Label(const std::string& id) const {
  for (const Entry& e : ReadIndex()) {
    if (e.id == id) return e.label;
  }
  throw nnet::CheckpointError("unknown checkpoint id " + id);
}

std::vector<std::string> CheckpointRegistry::List() const {
  std::vector<std::string> ids;
  for (const Entry& e : ReadIndex()) ids.push_back(e.id);
  return ids;
}

}  // namespace descent
