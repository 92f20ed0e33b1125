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

#ifndef CSCBENCH_TESTS_SUPPORT_SYNTHETIC_HPP_
#define CSCBENCH_TESTS_SUPPORT_SYNTHETIC_HPP_

// Test-only generators: a toy "language" of multi-character words over CJK
// code points, with a confusion set over the same inventory. Sentences have
// enough local structure for a trigram model to learn.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "confusion.hpp"
#include "rng.hpp"

namespace cscbench::testing {

struct WorldSpec {
  std::uint64_t seed = 1;
  std::size_t num_chars = 600;
  std::size_t num_words = 1500;
  // Fraction of inventory characters that are confusion keys.
  double key_frac = 0.7;
  std::size_t max_candidates = 6;
};

struct World {
  std::vector<char32_t> inventory;
  std::vector<std::u32string> words;
  // Successor word ids per word: a sparse first-order transition table.
  std::vector<std::vector<std::size_t>> successors;
  ConfusionSet confusion;
};

World MakeWorld(const WorldSpec& spec);

// One sentence per line (UTF-8), lengths in [min_len, max_len].
std::string GenerateCorpus(const World& world, std::size_t sentences, std::uint64_t seed, std::size_t min_len = 12,
                           std::size_t max_len = 46);

// Random confusion set with up to max_keys keys and 1..max_values values each
// over a small alphabet, with random tags.
ConfusionSet RandomConfusion(Rng& rng, std::size_t max_keys, std::size_t max_values);

}  // namespace cscbench::testing

#endif  // CSCBENCH_TESTS_SUPPORT_SYNTHETIC_HPP_
