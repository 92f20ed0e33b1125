// Copyright 2026 The cscbench Authors.
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

#ifndef CSCBENCH_CORE_MANIFEST_HPP_
#define CSCBENCH_CORE_MANIFEST_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cscbench {

inline constexpr std::string_view kToolVersion = "0.3.0";

// Provenance record written beside every generated output: inputs and
// outputs with SHA-256 digests, the seed and free-form counters. Contains no
// timestamps, so identical runs give identical manifests up to argv.
class RunManifest {
 public:
  RunManifest(std::string subcommand, std::vector<std::string> argv, std::optional<std::uint64_t> seed);

  // `name` is what gets recorded; `path` is where the bytes are read from.
  void AddInput(std::string role, const std::filesystem::path& path);
  void AddOutput(std::string name, const std::filesystem::path& path);
  void SetCounter(const std::string& name, std::uint64_t value);
  nlohmann::ordered_json& extra() { return extra_; }

  nlohmann::ordered_json ToJson() const;
  void Write(const std::filesystem::path& path) const;

 private:
  struct FileEntry {
    std::string name;
    std::string path;
    std::string sha256;
  };
  std::string subcommand_;
  std::vector<std::string> argv_;
  std::optional<std::uint64_t> seed_;
  std::vector<FileEntry> inputs_;
  std::vector<FileEntry> outputs_;
  nlohmann::ordered_json counters_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json extra_ = nlohmann::ordered_json::object();
};

struct DigestMismatch {
  std::string file;
  std::string expected;
  // Empty when the file could not be read.
  std::string actual;
};

// Recomputes every digest listed in a manifest. Output paths are resolved
// against the manifest's directory, inputs as recorded.
std::vector<DigestMismatch> VerifyManifest(const std::filesystem::path& manifest_path);

}  // namespace cscbench

#endif  // CSCBENCH_CORE_MANIFEST_HPP_
