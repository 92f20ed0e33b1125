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

#ifndef CSCBENCH_CORE_SENTENCE_HPP_
#define CSCBENCH_CORE_SENTENCE_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace cscbench {

struct CharError {
  std::size_t position = 0;
  char32_t wrong = 0;
  char32_t correct = 0;

  friend bool operator==(const CharError&, const CharError&) = default;
  friend auto operator<=>(const CharError&, const CharError&) = default;
};

// An aligned (source, target) pair; source may carry substitution errors.
// Invariants: |source| == |target|; `errors` lists exactly the differing
// positions in ascending order.
struct ParallelSentence {
  std::string id;
  std::u32string source;
  std::u32string target;
  std::vector<CharError> errors;

  friend bool operator==(const ParallelSentence&, const ParallelSentence&) = default;
};

// Builds a ParallelSentence, deriving `errors` by diffing. Throws DataError
// when the lengths differ.
ParallelSentence MakeParallel(std::string id, std::u32string source, std::u32string target);

// Re-diffs source against target and compares with the stored errors.
bool HasConsistentErrors(const ParallelSentence& s);

}  // namespace cscbench

#endif  // CSCBENCH_CORE_SENTENCE_HPP_
