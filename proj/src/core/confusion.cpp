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

#include "confusion.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "error.hpp"
#include "rng.hpp"
#include "text.hpp"
#include "utf8.hpp"

namespace cscbench {

namespace {

// Guards floor/ceil against products like 0.29 * 100 = 28.999999999999996.
constexpr double kRoundingSlack = 1e-9;

std::size_t FloorCount(double frac, std::size_t n) {
  return static_cast<std::size_t>(std::floor(frac * static_cast<double>(n) + kRoundingSlack));
}

std::size_t CeilCount(double frac, std::size_t n) {
  return static_cast<std::size_t>(std::ceil(frac * static_cast<double>(n) - kRoundingSlack));
}

char32_t SingleChar(std::string_view field, std::size_t line_no, const char* what) {
  std::u32string decoded;
  std::size_t bad = 0;
  if (!utf8::TryDecode(field, &decoded, &bad)) {
    throw ParseError(std::string("invalid UTF-8 in ") + what + " field", line_no);
  }
  if (decoded.size() != 1) {
    throw ParseError(std::string(what) + " field must be exactly one character, got " +
                         std::to_string(decoded.size()),
                     line_no);
  }
  return decoded[0];
}

}  // namespace

std::string_view TagCode(Tag tag) noexcept {
  switch (tag) {
    case Tag::kPhonetic:
      return "P";
    case Tag::kGraphic:
      return "G";
    case Tag::kBoth:
      return "PG";
  }
  return "PG";
}

std::optional<Tag> ParseTag(std::string_view code) noexcept {
  if (code == "P") return Tag::kPhonetic;
  if (code == "G") return Tag::kGraphic;
  if (code == "PG") return Tag::kBoth;
  return std::nullopt;
}

bool ConfusionSet::Add(char32_t key, char32_t value, Tag tag) {
  if (key == value) throw ArgumentError("misspelling pair with identical key and value");
  auto& candidates = entries_[key];
  for (auto& c : candidates) {
    if (c.value == value) {
      c.tag = c.tag | tag;
      return false;
    }
  }
  candidates.push_back({value, tag});
  ++num_pairs_;
  return true;
}

const std::vector<Candidate>* ConfusionSet::Find(char32_t key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

bool ConfusionSet::Contains(char32_t key, char32_t value) const { return TagOf(key, value).has_value(); }

std::optional<Tag> ConfusionSet::TagOf(char32_t key, char32_t value) const {
  const auto* candidates = Find(key);
  if (candidates == nullptr) return std::nullopt;
  for (const auto& c : *candidates) {
    if (c.value == value) return c.tag;
  }
  return std::nullopt;
}

std::vector<MisspellingPair> ConfusionSet::Pairs() const {
  std::vector<MisspellingPair> pairs;
  pairs.reserve(num_pairs_);
  for (const auto& [key, candidates] : entries_) {
    for (const auto& c : candidates) pairs.push_back({key, c.value, c.tag});
  }
  return pairs;
}

ParsedConfusion ParseConfusion(std::string_view text) {
  ParsedConfusion parsed;
  ForEachLine(text, [&](std::string_view line, std::size_t line_no) {
    if (line.empty() || line.front() == '#') return;
    const auto fields = SplitFields(line);
    if (fields.size() != 3) {
      throw ParseError("expected 3 tab-separated fields, got " + std::to_string(fields.size()), line_no);
    }
    const char32_t key = SingleChar(fields[0], line_no, "key");
    const char32_t value = SingleChar(fields[1], line_no, "value");
    if (key == value) throw ParseError("key and value are the same character", line_no);
    const auto tag = ParseTag(fields[2]);
    if (!tag) throw ParseError("unknown tag '" + std::string(fields[2]) + "' (expected P, G or PG)", line_no);
    if (!parsed.set.Add(key, value, *tag)) ++parsed.duplicate_lines;
  });
  return parsed;
}

std::string SerializeConfusion(const ConfusionSet& set) {
  std::string out;
  for (const auto& p : set.Pairs()) {
    out += utf8::Encode(p.key);
    out += '\t';
    out += utf8::Encode(p.value);
    out += '\t';
    out += TagCode(p.tag);
    out += '\n';
  }
  return out;
}

ConfusionSet Merge(const ConfusionSet& a, const ConfusionSet& b) {
  ConfusionSet out = a;
  for (const auto& p : b.Pairs()) out.Add(p.key, p.value, p.tag);
  return out;
}

ConfusionSet FilterByTag(const ConfusionSet& set, Tag want) {
  if (want == Tag::kBoth) throw ArgumentError("filter tag must be phonetic or graphic");
  ConfusionSet out;
  for (const auto& p : set.Pairs()) {
    if (Matches(p.tag, want)) out.Add(p.key, p.value, p.tag);
  }
  return out;
}

ConfusionStats Stats(const ConfusionSet& set) noexcept { return {set.num_keys(), set.num_pairs()}; }

void SplitSpec::Validate() const {
  if (!(key_holdout_frac >= 0.0 && key_holdout_frac <= 1.0)) {
    throw ArgumentError("key_holdout_frac must lie in [0, 1]");
  }
  if (!(value_key_frac >= 0.0 && value_key_frac <= 1.0)) {
    throw ArgumentError("value_key_frac must lie in [0, 1]");
  }
  if (!(value_holdout_frac > 0.0 && value_holdout_frac < 1.0)) {
    throw ArgumentError("value_holdout_frac must lie in (0, 1)");
  }
  if (min_train_values < 1) throw ArgumentError("min_train_values must be at least 1");
}

SplitResult Split(const ConfusionSet& set, const SplitSpec& spec) {
  spec.Validate();
  if (set.empty()) throw DataError("cannot split an empty confusion set");

  std::vector<const ConfusionSet::Entries::value_type*> keys;
  keys.reserve(set.num_keys());
  for (const auto& entry : set.entries()) keys.push_back(&entry);

  Rng rng(spec.seed);
  SplitResult result;

  const auto held_keys = rng.SampleIndices(keys.size(), FloorCount(spec.key_holdout_frac, keys.size()));
  std::vector<bool> is_held(keys.size(), false);
  for (std::size_t i : held_keys) is_held[i] = true;

  std::vector<const ConfusionSet::Entries::value_type*> remaining;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto& [key, candidates] = *keys[i];
    if (is_held[i]) {
      for (const auto& c : candidates) result.s_unseen_k.Add(key, c.value, c.tag);
    } else {
      remaining.push_back(keys[i]);
    }
  }

  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i]->second.size() >= spec.min_train_values + 1) eligible.push_back(i);
  }
  const auto chosen = rng.SampleIndices(eligible.size(), FloorCount(spec.value_key_frac, eligible.size()));

  std::vector<std::vector<bool>> value_held(remaining.size());
  for (std::size_t e : chosen) {
    const std::size_t r = eligible[e];
    const std::size_t n_values = remaining[r]->second.size();
    const std::size_t take =
        std::min(CeilCount(spec.value_holdout_frac, n_values), n_values - spec.min_train_values);
    value_held[r].assign(n_values, false);
    for (std::size_t v : rng.SampleIndices(n_values, take)) value_held[r][v] = true;
  }

  for (std::size_t r = 0; r < remaining.size(); ++r) {
    const auto& [key, candidates] = *remaining[r];
    for (std::size_t v = 0; v < candidates.size(); ++v) {
      const bool held = !value_held[r].empty() && value_held[r][v];
      (held ? result.s_unseen_v : result.s_train).Add(key, candidates[v].value, candidates[v].tag);
    }
  }
  return result;
}

ConfusionSet ExtractSeenPairs(std::span<const ParallelSentence> dataset, std::size_t n, std::uint64_t seed,
                              const ConfusionSet* tag_source) {
  std::set<std::pair<char32_t, char32_t>> realized;
  for (const auto& s : dataset) {
    for (const auto& e : s.errors) realized.emplace(e.correct, e.wrong);
  }
  if (realized.empty()) throw DataError("no observed pairs: dataset contains no errors");

  const std::vector<std::pair<char32_t, char32_t>> pairs(realized.begin(), realized.end());
  Rng rng(seed);
  ConfusionSet out;
  for (std::size_t i : rng.SampleIndices(pairs.size(), n)) {
    const auto [correct, wrong] = pairs[i];
    Tag tag = Tag::kBoth;
    if (tag_source != nullptr) tag = tag_source->TagOf(correct, wrong).value_or(Tag::kBoth);
    out.Add(correct, wrong, tag);
  }
  return out;
}

}  // namespace cscbench
