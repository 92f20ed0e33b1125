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

#include "analysis.hpp"

#include <set>
#include <utility>

#include "error.hpp"
#include "rng.hpp"
#include "text.hpp"

namespace cscbench {

namespace {

using PairSet = std::set<std::pair<char32_t, char32_t>>;

PairSet RealizedPairs(std::span<const ParallelSentence> dataset) {
  PairSet pairs;
  for (const auto& s : dataset) {
    for (const auto& e : s.errors) pairs.emplace(e.correct, e.wrong);
  }
  return pairs;
}

double Pct(std::size_t covered, std::size_t total) {
  return total == 0 ? 100.0 : 100.0 * static_cast<double>(covered) / static_cast<double>(total);
}

}  // namespace

DatasetStats ComputeDatasetStats(std::span<const ParallelSentence> dataset) {
  DatasetStats stats;
  stats.num_sentences = dataset.size();
  for (const auto& s : dataset) stats.num_errors += s.errors.size();
  stats.num_error_pair_types = RealizedPairs(dataset).size();
  return stats;
}

CoverageReport Coverage(std::span<const ParallelSentence> test, std::span<const ParallelSentence> reference) {
  const PairSet ref = RealizedPairs(reference);
  const PairSet types = RealizedPairs(test);
  CoverageReport r;
  r.test_pair_types = types.size();
  for (const auto& p : types) r.covered_pair_types += ref.count(p);
  for (const auto& s : test) {
    for (const auto& e : s.errors) {
      ++r.test_pair_tokens;
      r.covered_pair_tokens += ref.count({e.correct, e.wrong});
    }
  }
  r.type_coverage_pct = Pct(r.covered_pair_types, r.test_pair_types);
  r.token_coverage_pct = Pct(r.covered_pair_tokens, r.test_pair_tokens);
  r.vacuous = r.test_pair_types == 0;
  return r;
}

nlohmann::ordered_json CoverageToJson(const CoverageReport& r) {
  nlohmann::ordered_json j;
  j["headline"] = "type";
  j["type_coverage_pct"] = r.type_coverage_pct;
  j["token_coverage_pct"] = r.token_coverage_pct;
  j["test_pair_types"] = r.test_pair_types;
  j["covered_pair_types"] = r.covered_pair_types;
  j["test_pair_tokens"] = r.test_pair_tokens;
  j["covered_pair_tokens"] = r.covered_pair_tokens;
  j["vacuous"] = r.vacuous;
  j["note"] =
      "coverage is reported over distinct (correct, wrong) pairs (type, headline) and over error "
      "occurrences (token); published ratios do not state which one they use";
  return j;
}

std::uint64_t SweepSeed(std::uint64_t seed, double p_e) { return SubstreamSeed(seed, "sweep/" + FormatReal(p_e)); }

std::vector<SweepRow> Sweep(std::span<const CleanSentence> pool, const ConfusionSet& confusion,
                            std::span<const double> pe_list, const Corrector& corrector, std::uint64_t seed,
                            unsigned jobs) {
  if (pe_list.empty()) throw ArgumentError("sweep needs at least one p_e");
  for (double p : pe_list) {
    if (!(p > 0.0 && p <= 1.0)) throw ArgumentError("sweep p_e values must lie in (0, 1]; got " + FormatReal(p));
  }
  std::vector<SweepRow> rows;
  rows.reserve(pe_list.size());
  for (double p : pe_list) {
    const auto dataset = BuildDataset(pool, confusion, {p, SweepSeed(seed, p)}, jobs);
    try {
      const auto predictions = RunCorrector(dataset, corrector, jobs);
      const auto instances = JoinPredictions(dataset, predictions);
      SweepRow row{p, ComputeDatasetStats(dataset).num_errors, Evaluate(instances)};
      rows.push_back(row);
    } catch (const std::exception& e) {
      throw DataError("sweep failed at p_e=" + FormatReal(p) + ": " + e.what());
    }
  }
  return rows;
}

std::string SweepToCsv(std::span<const SweepRow> rows) {
  std::string out = "p_e,level,task,accuracy,precision,recall,f1,tp,fp,fn\n";
  for (const auto& row : rows) {
    const std::pair<const char*, const MetricBlock*> blocks[] = {
        {"sentence,detection", &row.report.sentence_detection},
        {"sentence,correction", &row.report.sentence_correction},
        {"character,detection", &row.report.character_detection},
        {"character,correction", &row.report.character_correction},
    };
    for (const auto& [label, b] : blocks) {
      out += FormatReal(row.p_e) + ',' + label + ',' + FormatReal(b->accuracy) + ',' + FormatReal(b->precision) +
             ',' + FormatReal(b->recall) + ',' + FormatReal(b->f1) + ',' + std::to_string(b->counts.tp) + ',' +
             std::to_string(b->counts.fp) + ',' + std::to_string(b->counts.fn) + '\n';
    }
  }
  return out;
}

}  // namespace cscbench
