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

#include "sentence.hpp"

#include "error.hpp"

namespace cscbench {

namespace {

std::vector<CharError> Diff(const std::u32string& source, const std::u32string& target) {
  std::vector<CharError> errors;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] != target[i]) errors.push_back({i, source[i], target[i]});
  }
  return errors;
}

}  // namespace

ParallelSentence MakeParallel(std::string id, std::u32string source, std::u32string target) {
  if (source.size() != target.size()) {
    throw DataError("sentence '" + id + "': source has " + std::to_string(source.size()) +
                    " characters but target has " + std::to_string(target.size()));
  }
  ParallelSentence s{std::move(id), std::move(source), std::move(target), {}};
  s.errors = Diff(s.source, s.target);
  return s;
}

bool HasConsistentErrors(const ParallelSentence& s) {
  return s.source.size() == s.target.size() && Diff(s.source, s.target) == s.errors;
}

}  // namespace cscbench
