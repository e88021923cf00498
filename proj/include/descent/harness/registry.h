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

#ifndef DESCENT_HARNESS_REGISTRY_H_
#define DESCENT_HARNESS_REGISTRY_H_

#include <string>
#include <vector>

namespace descent {

// Content-addressed checkpoint store. Each entry is <id>.bin plus an
// <id>.config.txt snapshot; index.tsv lists ids in save order.
class CheckpointRegistry {
 public:
  explicit CheckpointRegistry(std::string dir);

  // Returns the id (FNV-1a of the bytes, 16 hex digits). Saving identical
  // bytes again returns the existing id.
  std::string Save(const std::string& bytes, const std::string& config_text,
                   const std::string& label = "");

  // Throws nnet::CheckpointError on unknown ids, content that no longer
  // hashes to its id, or an architecture other than expected_architecture
  // (when non-empty).
  std::string Load(const std::string& id, const std::string& expected_architecture = "") const;

  std::string Config(const std::string& id) const;
  std::string Label(const std::string& id) const;
  std::vector<std::string> List() const;

  static std::string ContentId(const std::string& bytes);

 private:
  struct Entry {
    std::string id;
    std::string label;
  };
  std::vector<Entry> ReadIndex() const;
  std::string Path(const std::string& id, const char* suffix) const;

  std::string dir_;
};

}  // namespace descent

#endif  // DESCENT_HARNESS_REGISTRY_H_
