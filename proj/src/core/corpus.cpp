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

#include "corpus.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "text.hpp"
#include "utf8.hpp"

namespace cscbench {

namespace {

bool IsTrimmable(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:
    case 0x3000:
    case 0xFEFF:
      return true;
    default:
      return false;
  }
}

std::u32string Trim(std::u32string s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && IsTrimmable(s[b])) ++b;
  while (e > b && IsTrimmable(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::string PadOrdinal(std::size_t ordinal, std::size_t width) {
  std::string digits = std::to_string(ordinal);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return digits;
}

}  // namespace

LoadedCorpus LoadCorpus(std::string_view document, std::size_t min_len, std::size_t max_len) {
  if (const std::size_t bad = utf8::FindInvalid(document); bad != std::string_view::npos) {
    throw ParseError("invalid UTF-8 at byte offset " + std::to_string(bad), 0);
  }
  std::size_t total_lines = 0;
  ForEachLine(document, [&](std::string_view, std::size_t) { ++total_lines; });
  const std::size_t width = std::max<std::size_t>(8, std::to_string(total_lines).size());

  LoadedCorpus corpus;
  ForEachLine(document, [&](std::string_view line, std::size_t line_no) {
    ++corpus.report.lines;
    std::u32string text = Trim(utf8::Decode(line));
    if (text.empty()) {
      ++corpus.report.dropped_empty;
    } else if (text.find(U'\t') != std::u32string::npos) {
      ++corpus.report.dropped_malformed;
    } else if (text.size() < min_len) {
      ++corpus.report.dropped_short;
    } else if (text.size() > max_len) {
      ++corpus.report.dropped_long;
    } else {
      corpus.sentences.push_back({PadOrdinal(line_no, width), std::move(text)});
    }
  });
  corpus.report.kept = corpus.sentences.size();
  return corpus;
}

CorpusPools PartitionCorpus(std::span<const CleanSentence> sentences, std::size_t n_valid, std::size_t n_test,
                            std::uint64_t seed) {
  if (n_valid == 0 || n_test == 0) throw DataError("validation and test pools must be non-empty");
  if (n_valid + n_test >= sentences.size()) {
    throw DataError("corpus has " + std::to_string(sentences.size()) + " sentences; cannot carve " +
                    std::to_string(n_valid) + " validation and " + std::to_string(n_test) +
                    " test sentences and keep a non-empty training pool");
  }
  std::vector<std::size_t> order(sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  rng.Shuffle(order);

  auto take = [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx(order.begin() + static_cast<std::ptrdiff_t>(begin),
                                 order.begin() + static_cast<std::ptrdiff_t>(end));
    std::sort(idx.begin(), idx.end());
    std::vector<CleanSentence> pool;
    pool.reserve(idx.size());
    for (std::size_t i : idx) pool.push_back(sentences[i]);
    return pool;
  };
  CorpusPools pools;
  pools.valid = take(0, n_valid);
  pools.test = take(n_valid, n_valid + n_test);
  pools.train = take(n_valid + n_test, order.size());
  return pools;
}

void CorruptionConfig::Validate() const {
  if (!(p_e >= 0.0 && p_e <= 1.0)) throw ArgumentError("p_e must lie in [0, 1]");
}

ParallelSentence CorruptSentence(const CleanSentence& sentence, const ConfusionSet& confusion,
                                 const CorruptionConfig& cfg) {
  Rng rng(SubstreamSeed(cfg.master_seed, sentence.id));
  ParallelSentence out{sentence.id, sentence.text, sentence.text, {}};
  for (std::size_t i = 0; i < sentence.text.size(); ++i) {
    const char32_t correct = sentence.text[i];
    const auto* candidates = confusion.Find(correct);
    if (candidates == nullptr) continue;
    if (!rng.Bernoulli(cfg.p_e)) continue;
    const char32_t wrong = (*candidates)[rng.Below(candidates->size())].value;
    out.source[i] = wrong;
    out.errors.push_back({i, wrong, correct});
  }
  return out;
}

std::vector<ParallelSentence> BuildDataset(std::span<const CleanSentence> pool, const ConfusionSet& confusion,
                                           const CorruptionConfig& cfg, unsigned jobs) {
  cfg.Validate();
  std::vector<ParallelSentence> out(pool.size());
  ParallelFor(pool.size(), jobs, [&](std::size_t i) { out[i] = CorruptSentence(pool[i], confusion, cfg); });
  return out;
}

SContextResult BuildSContext(std::span<const ParallelSentence> sample, const ConfusionSet& confusion,
                             std::uint64_t seed) {
  SContextResult result;
  result.dataset.reserve(sample.size());
  for (const auto& s : sample) {
    Rng rng(SubstreamSeed(seed, s.id));
    ParallelSentence out = s;
    for (auto& e : out.errors) {
      const auto* candidates = confusion.Find(e.correct);
      if (candidates == nullptr) {
        throw DataError("sentence '" + s.id + "': correct character " + utf8::Encode(e.correct) +
                        " is not a key of the confusion set");
      }
      std::vector<char32_t> alternatives;
      for (const auto& c : *candidates) {
        if (c.value != e.wrong) alternatives.push_back(c.value);
      }
      if (alternatives.empty()) {
        ++result.singleton_kept;
        continue;
      }
      e.wrong = alternatives[rng.Below(alternatives.size())];
      out.source[e.position] = e.wrong;
      ++result.replaced;
    }
    result.dataset.push_back(std::move(out));
  }
  return result;
}

template <typename T>
std::vector<T> SampleInOrder(std::span<const T> items, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<T> out;
  for (std::size_t i : rng.SampleIndices(items.size(), n)) out.push_back(items[i]);
  return out;
}

template std::vector<ParallelSentence> SampleInOrder(std::span<const ParallelSentence>, std::size_t,
                                                     std::uint64_t);
template std::vector<CleanSentence> SampleInOrder(std::span<const CleanSentence>, std::size_t, std::uint64_t);

std::string SerializeDataset(std::span<const ParallelSentence> dataset) {
  std::string out;
  for (const auto& s : dataset) {
    out += s.id;
    out += '\t';
    out += utf8::Encode(s.source);
    out += '\t';
    out += utf8::Encode(s.target);
    out += '\n';
  }
  return out;
}

std::vector<ParallelSentence> ParseDataset(std::string_view text) {
  std::vector<ParallelSentence> out;
  ForEachLine(text, [&](std::string_view line, std::size_t line_no) {
    if (line.empty() || line.front() == '#') return;
    const auto fields = SplitFields(line);
    if (fields.size() != 3) {
      throw ParseError("expected id, source and target fields, got " + std::to_string(fields.size()), line_no);
    }
    std::u32string source;
    std::u32string target;
    std::size_t bad = 0;
    if (!utf8::TryDecode(fields[1], &source, &bad) || !utf8::TryDecode(fields[2], &target, &bad)) {
      throw ParseError("invalid UTF-8", line_no);
    }
    if (source.size() != target.size()) {
      throw ParseError("source and target lengths differ for id '" + std::string(fields[0]) + "'", line_no);
    }
    out.push_back(MakeParallel(std::string(fields[0]), std::move(source), std::move(target)));
  });
  return out;
}

std::string ProbsName(double p_e) { return "probs_" + FormatReal(p_e); }

const NamedDataset* Suite::Find(std::string_view name) const {
  for (const auto& d : datasets) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

Suite BuildSuite(const CorpusPools& pools, const SplitResult& split, const ConfusionSet& full,
                 const SuiteConfig& cfg) {
  auto require = [](const ConfusionSet& s, const char* name) {
    if (s.empty()) throw DataError(std::string("confusion subset ") + name + " is empty");
  };
  require(full, "s");
  require(split.s_train, "s_train");
  require(split.s_unseen_k, "s_unseen_k");
  require(split.s_unseen_v, "s_unseen_v");
  if (cfg.probs_pe.empty()) throw ArgumentError("the Probs sweep needs at least one p_e");
  if (pools.train.empty() || pools.valid.empty() || pools.test.empty()) {
    throw DataError("all corpus pools must be non-empty");
  }

  Suite suite;
  suite.s_p = FilterByTag(full, Tag::kPhonetic);
  suite.s_g = FilterByTag(full, Tag::kGraphic);
  require(suite.s_p, "s_p");
  require(suite.s_g, "s_g");

  auto corrupt = [&](const std::string& name, const std::string& confusion_name,
                     std::span<const CleanSentence> pool, const ConfusionSet& confusion, double p_e) {
    const CorruptionConfig c{p_e, SubstreamSeed(cfg.master_seed, name)};
    suite.datasets.push_back({name, confusion_name, p_e, BuildDataset(pool, confusion, c, cfg.jobs)});
  };

  corrupt("trainset", "s_train", pools.train, split.s_train, cfg.p_e);
  corrupt("validset", "s_train", pools.valid, split.s_train, cfg.p_e);
  corrupt("regular", "s", pools.test, full, cfg.p_e);
  for (double p : cfg.probs_pe) corrupt(ProbsName(p), "s", pools.test, full, p);
  corrupt("phonetics", "s_p", pools.test, suite.s_p, cfg.p_e);
  corrupt("graphics", "s_g", pools.test, suite.s_g, cfg.p_e);

  // Only valid until the next push_back.
  const auto& trainset = suite.datasets.front().sentences;
  suite.s_seen = ExtractSeenPairs(trainset, cfg.seen_pairs, SubstreamSeed(cfg.master_seed, "s_seen"), &full);
  const auto sample = SampleInOrder<ParallelSentence>(trainset, cfg.scontext_size,
                                                      SubstreamSeed(cfg.master_seed, "scontext/sample"));
  auto scontext = BuildSContext(sample, full, SubstreamSeed(cfg.master_seed, "scontext"));
  suite.scontext_singleton_kept = scontext.singleton_kept;

  corrupt("serror", "s_seen", pools.test, suite.s_seen, cfg.p_e);
  suite.datasets.push_back({"scontext", "s", -1.0, std::move(scontext.dataset)});
  corrupt("unseen_k", "s_unseen_k", pools.test, split.s_unseen_k, cfg.p_e_unseen_k);
  corrupt("unseen_v", "s_unseen_v", pools.test, split.s_unseen_v, cfg.p_e);
  corrupt("correct", "none", pools.test, ConfusionSet{}, 0.0);
  return suite;
}

}  // namespace cscbench
