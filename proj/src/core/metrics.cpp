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

#include "metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "error.hpp"
#include "text.hpp"
#include "utf8.hpp"

namespace cscbench {

namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void CheckLengths(const EvalInstance& x) {
  if (x.source.size() != x.target.size() || x.source.size() != x.prediction.size()) {
    throw DataError("instance '" + x.id + "': source/target/prediction lengths " +
                    std::to_string(x.source.size()) + "/" + std::to_string(x.target.size()) + "/" +
                    std::to_string(x.prediction.size()) + " differ");
  }
}

struct SentenceTally {
  Counts sentence_detection;
  Counts sentence_correction;
  Counts character_detection;
  Counts character_correction;
};

SentenceTally Score(const EvalInstance& x) {
  SentenceTally t;
  bool sets_equal = true;
  bool any_gold = false;
  bool any_pred = false;
  for (std::size_t i = 0; i < x.source.size(); ++i) {
    const bool gold = x.target[i] != x.source[i];
    const bool pred = x.prediction[i] != x.source[i];
    const bool fixed = x.prediction[i] == x.target[i];
    any_gold |= gold;
    any_pred |= pred;
    sets_equal &= gold == pred;

    auto& cd = t.character_detection;
    ++cd.total;
    if (gold == pred) ++cd.exact_correct;
    if (gold && pred) ++cd.tp;
    if (pred && !gold) ++cd.fp;
    if (gold && !pred) ++cd.fn;

    auto& cc = t.character_correction;
    ++cc.total;
    if (fixed) ++cc.exact_correct;
    const bool hit = pred && gold && fixed;
    if (hit) ++cc.tp;
    if (pred && !hit) ++cc.fp;
    if (gold && !hit) ++cc.fn;
  }

  auto& sd = t.sentence_detection;
  sd.total = 1;
  sd.exact_correct = sets_equal ? 1 : 0;
  const bool sd_hit = any_gold && sets_equal;
  sd.tp = sd_hit ? 1 : 0;
  sd.fp = (any_pred && !sd_hit) ? 1 : 0;
  sd.fn = (any_gold && !sd_hit) ? 1 : 0;

  auto& sc = t.sentence_correction;
  const bool exact = x.prediction == x.target;
  sc.total = 1;
  sc.exact_correct = exact ? 1 : 0;
  sc.tp = (any_gold && exact) ? 1 : 0;
  sc.fp = (any_pred && !exact) ? 1 : 0;
  sc.fn = (any_gold && !exact) ? 1 : 0;
  return t;
}

std::string Positions(const std::u32string& a, const std::u32string& b) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      if (!out.empty()) out += ',';
      out += std::to_string(i);
    }
  }
  return out.empty() ? "-" : out;
}

std::string Outcome(const Counts& c) {
  if (c.tp) return "TP";
  if (c.fp && c.fn) return "FP+FN";
  if (c.fp) return "FP";
  if (c.fn) return "FN";
  return "TN";
}

nlohmann::ordered_json BlockToJson(const MetricBlock& b) {
  nlohmann::ordered_json j;
  j["accuracy"] = b.accuracy;
  j["precision"] = b.precision;
  j["recall"] = b.recall;
  j["f1"] = b.f1;
  j["tp"] = b.counts.tp;
  j["fp"] = b.counts.fp;
  j["fn"] = b.counts.fn;
  j["total"] = b.counts.total;
  j["exact_correct"] = b.counts.exact_correct;
  return j;
}

struct NamedBlock {
  const char* level;
  const char* task;
  const MetricBlock* block;
};

std::vector<NamedBlock> Blocks(const EvalReport& r) {
  return {{"sentence", "detection", &r.sentence_detection},
          {"sentence", "correction", &r.sentence_correction},
          {"character", "detection", &r.character_detection},
          {"character", "correction", &r.character_correction}};
}

}  // namespace

Prf PrfFromCounts(const Counts& c) noexcept {
  Prf prf;
  prf.precision = Ratio(c.tp, c.tp + c.fp);
  prf.recall = Ratio(c.tp, c.tp + c.fn);
  const double sum = prf.precision + prf.recall;
  prf.f1 = sum > 0.0 ? 2.0 * prf.precision * prf.recall / sum : 0.0;
  return prf;
}

MetricBlock MetricBlock::FromCounts(const Counts& c) noexcept {
  const Prf prf = PrfFromCounts(c);
  return {Ratio(c.exact_correct, c.total), prf.precision, prf.recall, prf.f1, c};
}

EvalReport Evaluate(std::span<const EvalInstance> instances) {
  if (instances.empty()) throw DataError("nothing to evaluate: no instances");
  SentenceTally sum;
  for (const auto& x : instances) {
    CheckLengths(x);
    const SentenceTally t = Score(x);
    sum.sentence_detection += t.sentence_detection;
    sum.sentence_correction += t.sentence_correction;
    sum.character_detection += t.character_detection;
    sum.character_correction += t.character_correction;
  }
  return {MetricBlock::FromCounts(sum.sentence_detection), MetricBlock::FromCounts(sum.sentence_correction),
          MetricBlock::FromCounts(sum.character_detection), MetricBlock::FromCounts(sum.character_correction)};
}

double KeepCorrectAccuracy(std::span<const EvalInstance> instances) {
  if (instances.empty()) throw DataError("nothing to evaluate: no instances");
  std::size_t kept = 0;
  for (const auto& x : instances) {
    CheckLengths(x);
    if (x.source != x.target) throw DataError("instance '" + x.id + "' is not error-free");
    if (x.prediction == x.target) ++kept;
  }
  return Ratio(kept, instances.size());
}

std::vector<Prediction> ParsePredictions(std::string_view text) {
  std::vector<Prediction> out;
  ForEachLine(text, [&](std::string_view line, std::size_t line_no) {
    if (line.empty() || line.front() == '#') return;
    const auto fields = SplitFields(line);
    if (fields.size() != 2) {
      throw ParseError("expected id and prediction fields, got " + std::to_string(fields.size()), line_no);
    }
    Prediction p{std::string(fields[0]), {}};
    std::size_t bad = 0;
    if (!utf8::TryDecode(fields[1], &p.text, &bad)) throw ParseError("invalid UTF-8", line_no);
    out.push_back(std::move(p));
  });
  return out;
}

std::string SerializePredictions(std::span<const Prediction> predictions, std::string_view header_comment) {
  std::string out;
  if (!header_comment.empty()) {
    ForEachLine(header_comment, [&](std::string_view line, std::size_t) {
      out += "# ";
      out += line;
      out += '\n';
    });
  }
  for (const auto& p : predictions) {
    out += p.id;
    out += '\t';
    out += utf8::Encode(p.text);
    out += '\n';
  }
  return out;
}

std::vector<EvalInstance> JoinPredictions(std::span<const ParallelSentence> gold,
                                          std::span<const Prediction> predictions) {
  constexpr std::size_t kMaxListed = 10;
  auto list = [](const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size() && i < kMaxListed; ++i) {
      if (i) out += ", ";
      out += ids[i];
    }
    if (ids.size() > kMaxListed) out += ", ... (" + std::to_string(ids.size()) + " total)";
    return out;
  };

  std::map<std::string_view, const Prediction*> by_id;
  std::vector<std::string> duplicates;
  for (const auto& p : predictions) {
    if (!by_id.emplace(p.id, &p).second) duplicates.push_back(p.id);
  }
  if (!duplicates.empty()) throw DataError("duplicate prediction ids: " + list(duplicates));

  std::set<std::string_view> gold_ids;
  std::vector<std::string> missing;
  for (const auto& g : gold) {
    gold_ids.insert(g.id);
    if (!by_id.count(g.id)) missing.push_back(g.id);
  }
  std::vector<std::string> extra;
  for (const auto& p : predictions) {
    if (!gold_ids.count(p.id)) extra.push_back(p.id);
  }
  if (!missing.empty() || !extra.empty()) {
    std::string msg = "prediction ids do not match the gold dataset";
    if (!missing.empty()) msg += "; missing: " + list(missing);
    if (!extra.empty()) msg += "; extra: " + list(extra);
    throw DataError(msg);
  }

  std::vector<EvalInstance> out;
  out.reserve(gold.size());
  for (const auto& g : gold) {
    EvalInstance x{g.id, g.source, g.target, by_id.at(g.id)->text};
    CheckLengths(x);
    out.push_back(std::move(x));
  }
  return out;
}

nlohmann::ordered_json ReportToJson(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["sentence_detection"] = BlockToJson(report.sentence_detection);
  j["sentence_correction"] = BlockToJson(report.sentence_correction);
  j["character_detection"] = BlockToJson(report.character_detection);
  j["character_correction"] = BlockToJson(report.character_correction);
  return j;
}

std::string ReportToText(const EvalReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-10s %-11s %8s %8s %8s %8s %9s %9s %9s\n", "level", "task", "acc", "prec",
                "rec", "f1", "tp", "fp", "fn");
  out += line;
  for (const auto& b : Blocks(report)) {
    std::snprintf(line, sizeof(line), "%-10s %-11s %8.4f %8.4f %8.4f %8.4f %9zu %9zu %9zu\n", b.level, b.task,
                  b.block->accuracy, b.block->precision, b.block->recall, b.block->f1, b.block->counts.tp,
                  b.block->counts.fp, b.block->counts.fn);
    out += line;
  }
  return out;
}

std::string ReportToTsv(const EvalReport& report) {
  std::string out = "level\ttask\taccuracy\tprecision\trecall\tf1\ttp\tfp\tfn\n";
  for (const auto& b : Blocks(report)) {
    out += std::string(b.level) + '\t' + b.task + '\t' + FormatReal(b.block->accuracy) + '\t' +
           FormatReal(b.block->precision) + '\t' + FormatReal(b.block->recall) + '\t' + FormatReal(b.block->f1) +
           '\t' + std::to_string(b.block->counts.tp) + '\t' + std::to_string(b.block->counts.fp) + '\t' +
           std::to_string(b.block->counts.fn) + '\n';
  }
  return out;
}

std::string DetailRowsTsv(std::span<const EvalInstance> instances) {
  std::string out = "id\tgold_positions\tpredicted_positions\tdetection\tcorrection\n";
  for (const auto& x : instances) {
    CheckLengths(x);
    const SentenceTally t = Score(x);
    out += x.id + '\t' + Positions(x.source, x.target) + '\t' + Positions(x.source, x.prediction) + '\t' +
           Outcome(t.sentence_detection) + '\t' + Outcome(t.sentence_correction) + '\n';
  }
  return out;
}

}  // namespace cscbench
