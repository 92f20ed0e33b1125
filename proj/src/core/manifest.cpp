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

#include "manifest.hpp"

#include "digest.hpp"
#include "error.hpp"

namespace cscbench {

RunManifest::RunManifest(std::string subcommand, std::vector<std::string> argv,
                         std::optional<std::uint64_t> seed)
    : subcommand_(std::move(subcommand)), argv_(std::move(argv)), seed_(seed) {}

void RunManifest::AddInput(std::string role, const std::filesystem::path& path) {
  inputs_.push_back({std::move(role), path.string(), Sha256HexOfFile(path)});
}

void RunManifest::AddOutput(std::string name, const std::filesystem::path& path) {
  outputs_.push_back({name, std::move(name), Sha256HexOfFile(path)});
}

void RunManifest::SetCounter(const std::string& name, std::uint64_t value) { counters_[name] = value; }

nlohmann::ordered_json RunManifest::ToJson() const {
  nlohmann::ordered_json j;
  j["tool"] = "cscbench";
  j["tool_version"] = kToolVersion;
  j["subcommand"] = subcommand_;
  j["argv"] = argv_;
  if (seed_) {
    j["master_seed"] = *seed_;
  } else {
    j["master_seed"] = nullptr;
  }
  auto files = [](const std::vector<FileEntry>& entries, const char* key) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
      nlohmann::ordered_json f;
      f[key] = e.name;
      f["path"] = e.path;
      f["sha256"] = e.sha256;
      arr.push_back(std::move(f));
    }
    return arr;
  };
  j["inputs"] = files(inputs_, "role");
  j["outputs"] = files(outputs_, "name");
  j["counters"] = counters_;
  for (const auto& [k, v] : extra_.items()) j[k] = v;
  return j;
}

void RunManifest::Write(const std::filesystem::path& path) const { WriteFile(path, ToJson().dump(2) + "\n"); }

std::vector<DigestMismatch> VerifyManifest(const std::filesystem::path& manifest_path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadFile(manifest_path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest is not valid JSON: ") + e.what(), 0);
  }
  const auto dir = manifest_path.parent_path();
  std::vector<DigestMismatch> mismatches;
  auto check = [&](const nlohmann::json& entry, bool relative) {
    const std::string recorded = entry.at("path").get<std::string>();
    const std::string expected = entry.at("sha256").get<std::string>();
    const std::filesystem::path p = relative ? dir / recorded : std::filesystem::path(recorded);
    std::string actual;
    try {
      actual = Sha256HexOfFile(p);
    } catch (const IoError&) {
    }
    if (actual != expected) mismatches.push_back({p.string(), expected, actual});
  };
  for (const auto& e : j.at("inputs")) check(e, false);
  for (const auto& e : j.at("outputs")) check(e, true);
  return mismatches;
}

}  // namespace cscbench
