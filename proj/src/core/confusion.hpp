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

#ifndef CSCBENCH_CORE_CONFUSION_HPP_
#define CSCBENCH_CORE_CONFUSION_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentence.hpp"

namespace cscbench {

// Similarity tag of a misspelling pair. kBoth is the bitwise union, so tags
// combine with |.
enum class Tag : std::uint8_t { kPhonetic = 1, kGraphic = 2, kBoth = 3 };

constexpr Tag operator|(Tag a, Tag b) noexcept {
  return static_cast<Tag>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}
constexpr bool Matches(Tag tag, Tag want) noexcept {
  return (static_cast<std::uint8_t>(tag) & static_cast<std::uint8_t>(want)) != 0;
}

// "P", "G" or "PG".
std::string_view TagCode(Tag tag) noexcept;
std::optional<Tag> ParseTag(std::string_view code) noexcept;

struct Candidate {
  char32_t value = 0;
  Tag tag = Tag::kBoth;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct MisspellingPair {
  char32_t key = 0;
  char32_t value = 0;
  Tag tag = Tag::kBoth;
  friend bool operator==(const MisspellingPair&, const MisspellingPair&) = default;
};

// Map from a correct character to its error-prone candidates. Keys iterate
// in code-point order; per key, candidates keep insertion order and are
// unique. No key ever has an empty candidate list.
class ConfusionSet {
 public:
  using Entries = std::map<char32_t, std::vector<Candidate>>;

  // Inserts the pair, or combines its tag into an existing identical pair.
  // Returns true when the pair was new. Throws ArgumentError if key == value.
  bool Add(char32_t key, char32_t value, Tag tag);

  const std::vector<Candidate>* Find(char32_t key) const;
  bool ContainsKey(char32_t key) const { return entries_.count(key) != 0; }
  bool Contains(char32_t key, char32_t value) const;
  std::optional<Tag> TagOf(char32_t key, char32_t value) const;

  const Entries& entries() const noexcept { return entries_; }
  std::size_t num_keys() const noexcept { return entries_.size(); }
  std::size_t num_pairs() const noexcept { return num_pairs_; }
  bool empty() const noexcept { return entries_.empty(); }

  std::vector<MisspellingPair> Pairs() const;

  friend bool operator==(const ConfusionSet&, const ConfusionSet&) = default;

 private:
  Entries entries_;
  std::size_t num_pairs_ = 0;
};

struct ParsedConfusion {
  ConfusionSet set;
  std::size_t duplicate_lines = 0;
};

// Reads `key<TAB>value<TAB>tag` lines; blank and '#' lines are skipped.
// Duplicate pairs merge their tags and are counted in duplicate_lines.
ParsedConfusion ParseConfusion(std::string_view text);

// Canonical TSV: keys in code-point order, values in stored order.
std::string SerializeConfusion(const ConfusionSet& set);

ConfusionSet Merge(const ConfusionSet& a, const ConfusionSet& b);

// Pairs tagged `want` or kBoth. `want` must be kPhonetic or kGraphic.
ConfusionSet FilterByTag(const ConfusionSet& set, Tag want);

struct ConfusionStats {
  std::size_t num_keys = 0;
  std::size_t num_pairs = 0;
  friend bool operator==(const ConfusionStats&, const ConfusionStats&) = default;
};
ConfusionStats Stats(const ConfusionSet& set) noexcept;

struct SplitSpec {
  std::uint64_t seed = 0;
  // Fraction of keys withheld together with all their values.
  double key_holdout_frac = 0.23;
  // Fraction of the remaining multi-value keys that lose some values.
  double value_key_frac = 0.98;
  // Fraction of each such key's values that are withheld.
  double value_holdout_frac = 0.13;
  std::size_t min_train_values = 1;

  void Validate() const;
};

struct SplitResult {
  ConfusionSet s_train;
  ConfusionSet s_unseen_k;
  ConfusionSet s_unseen_v;
};

// Partitions `set` into training, unseen-key and unseen-value parts:
//   1. floor(key_holdout_frac * |keys|) keys go to s_unseen_k with all values.
//   2. Of the remaining keys with more than min_train_values values,
//      floor(value_key_frac * n) are drawn; each moves
//      min(ceil(value_holdout_frac * |values|), |values| - min_train_values)
//      of its values to s_unseen_v.
//   3. Everything else is s_train.
// Sampling runs over keys in code-point order, so the result depends only on
// (set, spec).
SplitResult Split(const ConfusionSet& set, const SplitSpec& spec);

// Samples up to n distinct (correct, wrong) pairs realized in `dataset`.
// Tags are copied from `tag_source` when given and found there, else kBoth.
// Throws DataError when the dataset realizes no errors.
ConfusionSet ExtractSeenPairs(std::span<const ParallelSentence> dataset, std::size_t n,
                              std::uint64_t seed, const ConfusionSet* tag_source = nullptr);

}  // namespace cscbench

#endif  // CSCBENCH_CORE_CONFUSION_HPP_
