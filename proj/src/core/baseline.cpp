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

#include "baseline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <tuple>

#include "digest.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "text.hpp"
#include "utf8.hpp"

namespace cscbench {

namespace {

constexpr std::string_view kLmMagic = "#cscbench-ngram v1";
constexpr std::string_view kFooterTag = "#sha256\t";

bool NeedsEscape(char32_t c) {
  return c < 0x21 || c == 0x7F || c == U'\\' || c == U'<' || c == 0x85 || c == 0xA0 || c == 0x2028 ||
         c == 0x2029 || c == 0x3000 || c == 0xFEFF;
}

std::string SymbolToken(char32_t c) {
  if (c == NGramLM::kBos) return "<s>";
  if (c == NGramLM::kEos) return "</s>";
  if (c == NGramLM::kUnk) return "<unk>";
  if (NeedsEscape(c)) {
    char buf[16];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), static_cast<std::uint32_t>(c), 16);
    return "\\u{" + std::string(buf, end) + "}";
  }
  return utf8::Encode(c);
}

char32_t ParseSymbol(std::string_view tok, std::size_t line_no) {
  if (tok == "<s>") return NGramLM::kBos;
  if (tok == "</s>") return NGramLM::kEos;
  if (tok == "<unk>") return NGramLM::kUnk;
  if (tok.size() > 4 && tok.substr(0, 3) == "\\u{" && tok.back() == '}') {
    std::uint32_t v = 0;
    const auto hex = tok.substr(3, tok.size() - 4);
    const auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
    if (ec == std::errc() && ptr == hex.data() + hex.size() && v <= 0x10FFFF) return v;
    throw ParseError("bad escaped symbol '" + std::string(tok) + "'", line_no);
  }
  std::u32string decoded;
  std::size_t bad = 0;
  if (!utf8::TryDecode(tok, &decoded, &bad) || decoded.size() != 1) {
    throw ParseError("bad symbol '" + std::string(tok) + "'", line_no);
  }
  return decoded[0];
}

template <typename T>
T ParseNumber(std::string_view field, std::size_t line_no, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(field) + "'", line_no);
  }
  return v;
}

}  // namespace

std::vector<char32_t> NGramLM::Vocabulary() const {
  std::vector<char32_t> v(vocab_.begin(), vocab_.end());
  std::sort(v.begin(), v.end());
  return v;
}

char32_t NGramLM::Normalize(char32_t c) const {
  if (c == kBos || vocab_.count(c)) return c;
  return kUnk;
}

std::u32string NGramLM::ContextKey(std::u32string_view context) const {
  const std::size_t want = static_cast<std::size_t>(order_ - 1);
  std::u32string key(want, kBos);
  const std::size_t have = std::min(want, context.size());
  for (std::size_t i = 0; i < have; ++i) {
    key[want - have + i] = Normalize(context[context.size() - have + i]);
  }
  return key;
}

const NGramLM::Row* NGramLM::FindRow(std::u32string_view context) const {
  auto it = rows_.find(ContextKey(context));
  return it == rows_.end() ? nullptr : &it->second;
}

void NGramLM::AddCount(const std::u32string& key, char32_t next, std::uint64_t n) {
  Row& row = rows_[key];
  row.total += n;
  row.next[next] += n;
}

std::uint64_t NGramLM::Count(std::u32string_view context, char32_t next) const {
  const Row* row = FindRow(context);
  if (row == nullptr) return 0;
  auto it = row->next.find(Normalize(next));
  return it == row->next.end() ? 0 : it->second;
}

std::uint64_t NGramLM::ContextTotal(std::u32string_view context) const {
  const Row* row = FindRow(context);
  return row == nullptr ? 0 : row->total;
}

double NGramLM::LogProb(std::u32string_view context, char32_t next) const {
  const Row* row = FindRow(context);
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  if (row != nullptr) {
    total = row->total;
    auto it = row->next.find(Normalize(next));
    if (it != row->next.end()) count = it->second;
  }
  return std::log((static_cast<double>(count) + add_k_) /
                  (static_cast<double>(total) + add_k_ * static_cast<double>(vocab_.size())));
}

NGramLM TrainLm(std::span<const std::u32string> corpus, int order, double add_k) {
  if (order < 1) throw ArgumentError("n-gram order must be at least 1");
  if (!(add_k > 0.0)) throw ArgumentError("add_k must be positive");
  if (corpus.empty()) throw ArgumentError("cannot train a language model on an empty corpus");

  NGramLM lm;
  lm.order_ = order;
  lm.add_k_ = add_k;
  lm.vocab_ = {NGramLM::kEos, NGramLM::kUnk};
  const std::size_t ctx = static_cast<std::size_t>(order - 1);
  std::u32string padded;
  for (const auto& sentence : corpus) {
    lm.vocab_.insert(sentence.begin(), sentence.end());
    padded.assign(ctx, NGramLM::kBos);
    padded += sentence;
    padded.push_back(NGramLM::kEos);
    for (std::size_t j = ctx; j < padded.size(); ++j) {
      lm.AddCount(padded.substr(j - ctx, ctx), padded[j], 1);
    }
  }
  return lm;
}

std::string NGramLM::Serialize() const {
  std::string out;
  out += kLmMagic;
  out += '\n';
  out += "order\t" + std::to_string(order_) + '\n';
  out += "add_k\t" + FormatReal(add_k_) + '\n';
  out += "vocab_size\t" + std::to_string(vocab_.size()) + '\n';
  for (char32_t c : Vocabulary()) out += "vocab\t" + SymbolToken(c) + '\n';

  std::vector<std::tuple<const std::u32string*, char32_t, std::uint64_t>> entries;
  for (const auto& [key, row] : rows_) {
    for (const auto& [next, n] : row.next) entries.emplace_back(&key, next, n);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (*std::get<0>(a) != *std::get<0>(b)) return *std::get<0>(a) < *std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  for (const auto& [key, next, n] : entries) {
    out += "count\t";
    for (std::size_t i = 0; i < key->size(); ++i) {
      if (i) out += ' ';
      out += SymbolToken((*key)[i]);
    }
    out += '\t' + SymbolToken(next) + '\t' + std::to_string(n) + '\n';
  }
  const std::string digest = Sha256Hex(out);
  out += kFooterTag;
  out += digest;
  out += '\n';
  return out;
}

NGramLM NGramLM::Parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.back() == '\n') body.remove_suffix(1);
  const std::size_t footer_at = body.rfind('\n');
  if (footer_at == std::string_view::npos) throw ParseError("language model file is truncated", 0);
  const std::string_view footer = body.substr(footer_at + 1);
  body = text.substr(0, footer_at + 1);
  if (footer.substr(0, kFooterTag.size()) != kFooterTag) throw ParseError("missing SHA-256 footer", 0);
  if (footer.substr(kFooterTag.size()) != Sha256Hex(body)) {
    throw ParseError("SHA-256 footer does not match the file contents", 0);
  }

  NGramLM lm;
  lm.vocab_.clear();
  std::size_t declared_vocab = 0;
  bool seen_magic = false;
  ForEachLine(body, [&](std::string_view line, std::size_t line_no) {
    if (!seen_magic) {
      if (line != kLmMagic) throw ParseError("not a cscbench n-gram file", line_no);
      seen_magic = true;
      return;
    }
    const auto f = SplitFields(line);
    if (f[0] == "order" && f.size() == 2) {
      lm.order_ = ParseNumber<int>(f[1], line_no, "order");
      if (lm.order_ < 1) throw ParseError("order must be at least 1", line_no);
    } else if (f[0] == "add_k" && f.size() == 2) {
      lm.add_k_ = ParseNumber<double>(f[1], line_no, "add_k");
    } else if (f[0] == "vocab_size" && f.size() == 2) {
      declared_vocab = ParseNumber<std::size_t>(f[1], line_no, "vocab_size");
    } else if (f[0] == "vocab" && f.size() == 2) {
      lm.vocab_.insert(ParseSymbol(f[1], line_no));
    } else if (f[0] == "count" && f.size() == 4) {
      std::u32string key;
      if (!f[1].empty()) {
        for (auto tok : SplitFields(f[1], ' ')) key.push_back(ParseSymbol(tok, line_no));
      }
      if (key.size() != static_cast<std::size_t>(lm.order_ - 1)) {
        throw ParseError("context length does not match the model order", line_no);
      }
      lm.AddCount(key, ParseSymbol(f[2], line_no), ParseNumber<std::uint64_t>(f[3], line_no, "count"));
    } else {
      throw ParseError("unrecognized line", line_no);
    }
  });
  if (lm.vocab_.size() != declared_vocab) throw ParseError("vocab_size does not match the vocab lines", 0);
  return lm;
}

InverseIndex BuildInverseIndex(const ConfusionSet& confusion) {
  InverseIndex inverse;
  for (const auto& p : confusion.Pairs()) inverse[p.value].push_back(p.key);
  for (auto& [observed, keys] : inverse) std::sort(keys.begin(), keys.end());
  return inverse;
}

ChannelModel::ChannelModel(ConfusionSet confusion, double p_err)
    : confusion_(std::move(confusion)), inverse_(BuildInverseIndex(confusion_)), p_err_(p_err) {
  if (!(p_err > 0.0 && p_err < 1.0)) throw ArgumentError("p_err must lie in (0, 1)");
}

const std::vector<char32_t>* ChannelModel::Sources(char32_t observed) const {
  auto it = inverse_.find(observed);
  return it == inverse_.end() ? nullptr : &it->second;
}

double ChannelModel::LogProb(char32_t observed, char32_t intended) const {
  if (observed == intended) return std::log1p(-p_err_);
  const auto* candidates = confusion_.Find(intended);
  if (candidates == nullptr || !confusion_.Contains(intended, observed)) {
    return -std::numeric_limits<double>::infinity();
  }
  return std::log(p_err_ / static_cast<double>(candidates->size()));
}

double NoisyChannelCorrector::WindowScore(const std::u32string& padded, std::size_t pos,
                                          std::size_t length) const {
  const std::size_t ctx = static_cast<std::size_t>(lm_.order() - 1);
  const std::size_t last = std::min(pos + ctx, length);
  double sum = 0.0;
  // An n-gram ending at sentence position j covers [j - ctx, j]; j == length is </s>.
  for (std::size_t j = pos; j <= last; ++j) {
    sum += lm_.LogProb(std::u32string_view(padded).substr(j, ctx), padded[j + ctx]);
  }
  return sum;
}

std::u32string NoisyChannelCorrector::Correct(std::u32string_view source) const {
  const std::size_t ctx = static_cast<std::size_t>(lm_.order() - 1);
  std::u32string padded(ctx, NGramLM::kBos);
  padded += source;
  padded.push_back(NGramLM::kEos);

  for (std::size_t i = 0; i < source.size(); ++i) {
    const char32_t observed = source[i];
    const auto* sources = channel_.Sources(observed);
    if (sources == nullptr) continue;

    char32_t best = observed;
    padded[i + ctx] = observed;
    double best_score = channel_.LogProb(observed, observed) + lambda_ * WindowScore(padded, i, source.size());
    for (char32_t k : *sources) {
      padded[i + ctx] = k;
      const double score = channel_.LogProb(observed, k) + lambda_ * WindowScore(padded, i, source.size());
      if (score > best_score) {
        best_score = score;
        best = k;
      }
    }
    padded[i + ctx] = best;
  }
  return padded.substr(ctx, source.size());
}

Corrector IdentityCorrector() {
  return [](std::string_view, std::u32string_view source) { return std::u32string(source); };
}

Corrector OracleCorrector(std::span<const ParallelSentence> gold) {
  auto targets = std::make_shared<std::map<std::string, std::u32string, std::less<>>>();
  for (const auto& s : gold) (*targets)[s.id] = s.target;
  return [targets](std::string_view id, std::u32string_view) {
    auto it = targets->find(id);
    if (it == targets->end()) throw DataError("oracle has no target for id '" + std::string(id) + "'");
    return it->second;
  };
}

Corrector RandomCandidateCorrector(const ChannelModel& channel, std::uint64_t seed) {
  return [&channel, seed](std::string_view id, std::u32string_view source) {
    Rng rng(SubstreamSeed(seed, id));
    std::u32string out(source);
    for (auto& c : out) {
      const auto* sources = channel.Sources(c);
      if (sources == nullptr) continue;
      const std::size_t pick = static_cast<std::size_t>(rng.Below(sources->size() + 1));
      if (pick > 0) c = (*sources)[pick - 1];
    }
    return out;
  };
}

Corrector BaselineCorrector(const NoisyChannelCorrector& corrector) {
  return [&corrector](std::string_view, std::u32string_view source) { return corrector.Correct(source); };
}

std::vector<Prediction> RunCorrector(std::span<const ParallelSentence> dataset, const Corrector& corrector,
                                     unsigned jobs) {
  std::vector<Prediction> out(dataset.size());
  ParallelFor(dataset.size(), jobs, [&](std::size_t i) {
    const auto& s = dataset[i];
    std::u32string prediction = corrector(s.id, s.source);
    if (prediction.size() != s.source.size()) {
      throw DataError("corrector changed the length of sentence '" + s.id + "'");
    }
    out[i] = {s.id, std::move(prediction)};
  });
  return out;
}

}  // namespace cscbench
