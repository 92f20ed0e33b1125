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

#ifndef CSCBENCH_CORE_BASELINE_HPP_
#define CSCBENCH_CORE_BASELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "confusion.hpp"
#include "metrics.hpp"
#include "sentence.hpp"

namespace cscbench {

// Character n-gram model with add-k smoothing over a closed vocabulary
// (training characters, end-of-sentence and unknown).
class NGramLM {
 public:
  // Symbols outside the Unicode range so they never collide with text.
  static constexpr char32_t kBos = 0x110000;
  static constexpr char32_t kEos = 0x110001;
  static constexpr char32_t kUnk = 0x110002;

  NGramLM() = default;

  int order() const noexcept { return order_; }
  double add_k() const noexcept { return add_k_; }
  std::size_t vocab_size() const noexcept { return vocab_.size(); }
  // Sorted by code point; the special symbols sort last.
  std::vector<char32_t> Vocabulary() const;

  // Maps characters outside the vocabulary to kUnk; kBos passes through.
  char32_t Normalize(char32_t c) const;

  // Uses the last order-1 symbols of `context`, left-padded with kBos.
  std::uint64_t Count(std::u32string_view context, char32_t next) const;
  std::uint64_t ContextTotal(std::u32string_view context) const;

  // log[(count(ctx, next) + k) / (count(ctx, .) + k * |V|)]
  double LogProb(std::u32string_view context, char32_t next) const;

  // Sorted plain-text count file with a header and a SHA-256 footer.
  std::string Serialize() const;
  // Throws ParseError on malformed input or a footer digest mismatch.
  static NGramLM Parse(std::string_view text);

  friend NGramLM TrainLm(std::span<const std::u32string> corpus, int order, double add_k);

 private:
  struct Row {
    std::uint64_t total = 0;
    std::unordered_map<char32_t, std::uint64_t> next;
  };
  std::u32string ContextKey(std::u32string_view context) const;
  const Row* FindRow(std::u32string_view context) const;
  void AddCount(const std::u32string& key, char32_t next, std::uint64_t n);

  int order_ = 3;
  double add_k_ = 0.1;
  std::unordered_set<char32_t> vocab_;
  std::unordered_map<std::u32string, Row> rows_;
};

// Counts every n-gram of each sentence padded with order-1 kBos and one kEos.
// Throws ArgumentError for order < 1, add_k <= 0 or an empty corpus.
NGramLM TrainLm(std::span<const std::u32string> corpus, int order = 3, double add_k = 0.1);

// observed character -> sorted keys k with observed in confusion[k]
using InverseIndex = std::map<char32_t, std::vector<char32_t>>;
InverseIndex BuildInverseIndex(const ConfusionSet& confusion);

class ChannelModel {
 public:
  ChannelModel(ConfusionSet confusion, double p_err);

  double p_err() const noexcept { return p_err_; }
  const ConfusionSet& confusion() const noexcept { return confusion_; }
  const InverseIndex& inverse() const noexcept { return inverse_; }

  // Keys that could have produced `observed`; nullptr when none.
  const std::vector<char32_t>* Sources(char32_t observed) const;

  // log P(observed | intended): 1-p_err for an unchanged character,
  // p_err / |confusion[intended]| for a listed substitution, -inf otherwise.
  double LogProb(char32_t observed, char32_t intended) const;

 private:
  ConfusionSet confusion_;
  InverseIndex inverse_;
  double p_err_;
};

// Left-to-right greedy noisy-channel decoder. At each position the observed
// character and its inverse-index sources compete on
//   log P(observed | k) + lambda * (sum of the `order` n-gram log-probabilities
//                                   whose windows cover the position),
// with decoded characters on the left and raw source on the right. Ties go to
// the observed character, then to the lower code point.
class NoisyChannelCorrector {
 public:
  NoisyChannelCorrector(const NGramLM& lm, const ChannelModel& channel, double lambda = 1.0)
      : lm_(lm), channel_(channel), lambda_(lambda) {}

  std::u32string Correct(std::u32string_view source) const;

 private:
  double WindowScore(const std::u32string& padded, std::size_t pos, std::size_t length) const;

  const NGramLM& lm_;
  const ChannelModel& channel_;
  double lambda_;
};

// A corrector maps (sentence id, source) to a prediction of equal length.
using Corrector = std::function<std::u32string(std::string_view id, std::u32string_view source)>;

Corrector IdentityCorrector();
// Answers with the target stored for each id.
Corrector OracleCorrector(std::span<const ParallelSentence> gold);
// Replaces every confusable character by a uniform draw over the observed
// character and its sources, using SubstreamSeed(seed, id).
Corrector RandomCandidateCorrector(const ChannelModel& channel, std::uint64_t seed);
Corrector BaselineCorrector(const NoisyChannelCorrector& corrector);

// Runs `corrector` over the dataset on up to `jobs` threads; output order is
// dataset order. Throws DataError if a prediction changes the length.
std::vector<Prediction> RunCorrector(std::span<const ParallelSentence> dataset, const Corrector& corrector,
                                     unsigned jobs = 1);

}  // namespace cscbench

#endif  // CSCBENCH_CORE_BASELINE_HPP_
