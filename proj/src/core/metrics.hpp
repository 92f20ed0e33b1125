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

#ifndef CSCBENCH_CORE_METRICS_HPP_
#define CSCBENCH_CORE_METRICS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sentence.hpp"

namespace cscbench {

struct EvalInstance {
  std::string id;
  std::u32string source;
  std::u32string target;
  std::u32string prediction;
};

// Raw tallies behind one metric block. `total` is the number of scored units
// (sentences or characters) and `exact_correct` the units counted as correct
// for accuracy.
struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t total = 0;
  std::size_t exact_correct = 0;

  Counts& operator+=(const Counts& o) noexcept {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    total += o.total;
    exact_correct += o.exact_correct;
    return *this;
  }
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Zero denominators yield 0.
Prf PrfFromCounts(const Counts& c) noexcept;

struct MetricBlock {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  Counts counts;

  static MetricBlock FromCounts(const Counts& c) noexcept;
};

struct EvalReport {
  MetricBlock sentence_detection;
  MetricBlock sentence_correction;
  MetricBlock character_detection;
  MetricBlock character_correction;
};

// Per position, gold-positive means target != source and predicted-positive
// means prediction != source.
//
// Character level counts each position. Correction TP additionally needs
// prediction == target; any other predicted-positive position is a FP.
//
// Sentence level: detection TP needs the predicted and gold position sets to
// be equal and non-empty; correction TP needs errors and prediction == target.
// A sentence can be both FP and FN when it is flagged but not fully right.
//
// Throws DataError on an empty input or an instance whose three strings
// differ in length.
EvalReport Evaluate(std::span<const EvalInstance> instances);

// Fraction of instances left exactly as the target. Every instance must be
// error-free (source == target); throws DataError otherwise.
double KeepCorrectAccuracy(std::span<const EvalInstance> instances);

struct Prediction {
  std::string id;
  std::u32string text;
};

// `id<TAB>prediction` lines; blank and '#' lines are skipped.
std::vector<Prediction> ParsePredictions(std::string_view text);
std::string SerializePredictions(std::span<const Prediction> predictions, std::string_view header_comment = {});

// Pairs each gold sentence with its prediction by id, in gold order. Missing,
// extra or duplicate ids throw DataError listing up to 10 of them.
std::vector<EvalInstance> JoinPredictions(std::span<const ParallelSentence> gold,
                                          std::span<const Prediction> predictions);

nlohmann::ordered_json ReportToJson(const EvalReport& report);
std::string ReportToText(const EvalReport& report);
std::string ReportToTsv(const EvalReport& report);

// One row per sentence: id, gold positions, predicted positions, and the
// sentence-level detection/correction outcome. For error analysis only.
std::string DetailRowsTsv(std::span<const EvalInstance> instances);

}  // namespace cscbench

#endif  // CSCBENCH_CORE_METRICS_HPP_
