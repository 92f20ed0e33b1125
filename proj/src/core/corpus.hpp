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

#ifndef CSCBENCH_CORE_CORPUS_HPP_
#define CSCBENCH_CORE_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confusion.hpp"
#include "sentence.hpp"

namespace cscbench {

struct CleanSentence {
  std::string id;
  std::u32string text;
  friend bool operator==(const CleanSentence&, const CleanSentence&) = default;
};

struct LoadReport {
  std::size_t lines = 0;
  std::size_t kept = 0;
  std::size_t dropped_empty = 0;
  std::size_t dropped_short = 0;
  std::size_t dropped_long = 0;
  // Lines containing a tab, which the TSV formats cannot carry.
  std::size_t dropped_malformed = 0;
};

struct LoadedCorpus {
  std::vector<CleanSentence> sentences;
  LoadReport report;
};

// One sentence per line. Lines are trimmed of surrounding whitespace
// (including U+3000 and a BOM); lines outside [min_len, max_len] characters
// are dropped. Ids are the 1-based line ordinal, zero-padded to at least
// 8 digits. Throws ParseError with the byte offset on invalid UTF-8.
LoadedCorpus LoadCorpus(std::string_view document, std::size_t min_len = 1,
                        std::size_t max_len = std::numeric_limits<std::size_t>::max());

struct CorpusPools {
  std::vector<CleanSentence> train;
  std::vector<CleanSentence> valid;
  std::vector<CleanSentence> test;
};

// Shuffles with `seed`, takes n_valid then n_test sentences, leaves the rest
// for training. Each pool keeps corpus order. Throws DataError when any pool
// would be empty.
CorpusPools PartitionCorpus(std::span<const CleanSentence> sentences, std::size_t n_valid,
                            std::size_t n_test, std::uint64_t seed);

struct CorruptionConfig {
  double p_e = 0.05;
  std::uint64_t master_seed = 0;
  void Validate() const;
};

// Each character that is a key of `confusion` is replaced, with probability
// p_e, by a uniformly drawn candidate. Draws come from the substream
// SubstreamSeed(master_seed, id): one Bernoulli per eligible position in
// order, followed by one candidate index on success.
ParallelSentence CorruptSentence(const CleanSentence& sentence, const ConfusionSet& confusion,
                                 const CorruptionConfig& cfg);

std::vector<ParallelSentence> BuildDataset(std::span<const CleanSentence> pool, const ConfusionSet& confusion,
                                           const CorruptionConfig& cfg, unsigned jobs = 1);

struct SContextResult {
  std::vector<ParallelSentence> dataset;
  std::size_t replaced = 0;
  // Errors whose key has a single candidate and so kept the original wrong char.
  std::size_t singleton_kept = 0;
};

// Swaps every wrong character for another candidate of the same correct
// character drawn from `confusion`. Targets and error positions are kept.
// Throws DataError if an error's correct character is not a key.
SContextResult BuildSContext(std::span<const ParallelSentence> sample, const ConfusionSet& confusion,
                             std::uint64_t seed);

// Uniform sample of up to n items, in input order.
template <typename T>
std::vector<T> SampleInOrder(std::span<const T> items, std::size_t n, std::uint64_t seed);

std::string SerializeDataset(std::span<const ParallelSentence> dataset);
// Parses `id<TAB>source<TAB>target` lines; errors are re-derived by diffing.
std::vector<ParallelSentence> ParseDataset(std::string_view text);

struct SuiteConfig {
  std::uint64_t master_seed = 0;
  double p_e = 0.05;
  double p_e_unseen_k = 0.15;
  std::vector<double> probs_pe = {0.01, 0.02, 0.05, 0.10, 0.15, 0.20, 0.30};
  std::size_t scontext_size = 5000;
  std::size_t seen_pairs = 5000;
  unsigned jobs = 1;
};

struct NamedDataset {
  std::string name;
  // Confusion set used for corruption: s_train, s, s_p, s_g, s_seen,
  // s_unseen_k, s_unseen_v, or none.
  std::string confusion;
  // Substitution probability; negative when the set was not made by plain corruption.
  double p_e = 0.0;
  std::vector<ParallelSentence> sentences;
};

struct Suite {
  std::vector<NamedDataset> datasets;
  ConfusionSet s_p;
  ConfusionSet s_g;
  ConfusionSet s_seen;
  std::size_t scontext_singleton_kept = 0;

  const NamedDataset* Find(std::string_view name) const;
};

// Builds Trainset, Validset and the test sets (Regular, one Probs set per
// probs_pe value, Phonetics, Graphics, SError, SContext, UnseenK, UnseenV,
// Correct). Every dataset draws from SubstreamSeed(master_seed, name).
Suite BuildSuite(const CorpusPools& pools, const SplitResult& split, const ConfusionSet& full,
                 const SuiteConfig& cfg);

// File stem for a Probs dataset, e.g. "probs_0.05".
std::string ProbsName(double p_e);

}  // namespace cscbench

#endif  // CSCBENCH_CORE_CORPUS_HPP_
