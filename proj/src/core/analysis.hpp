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

#ifndef CSCBENCH_CORE_ANALYSIS_HPP_
#define CSCBENCH_CORE_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "baseline.hpp"
#include "confusion.hpp"
#include "corpus.hpp"
#include "metrics.hpp"
#include "sentence.hpp"

namespace cscbench {

struct DatasetStats {
  std::size_t num_sentences = 0;
  std::size_t num_errors = 0;
  // Distinct (correct, wrong) pairs among the errors.
  std::size_t num_error_pair_types = 0;
  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

DatasetStats ComputeDatasetStats(std::span<const ParallelSentence> dataset);

// How many of the test set's error pairs the reference set also realizes,
// both over distinct pairs (types) and over occurrences (tokens). With no
// test errors the percentages are 100 and `vacuous` is set.
struct CoverageReport {
  std::size_t test_pair_types = 0;
  std::size_t covered_pair_types = 0;
  double type_coverage_pct = 100.0;
  std::size_t test_pair_tokens = 0;
  std::size_t covered_pair_tokens = 0;
  double token_coverage_pct = 100.0;
  bool vacuous = true;
};

CoverageReport Coverage(std::span<const ParallelSentence> test, std::span<const ParallelSentence> reference);
nlohmann::ordered_json CoverageToJson(const CoverageReport& report);

struct SweepRow {
  double p_e = 0.0;
  std::size_t num_errors = 0;
  EvalReport report;
};

// Seed of the dataset synthesized for one sweep point.
std::uint64_t SweepSeed(std::uint64_t seed, double p_e);

// For each p_e, corrupts the same pool with its own substream, runs the
// corrector and evaluates. Rows follow pe_list order but each row depends
// only on its own p_e. A failing corrector aborts with DataError naming p_e.
std::vector<SweepRow> Sweep(std::span<const CleanSentence> pool, const ConfusionSet& confusion,
                            std::span<const double> pe_list, const Corrector& corrector, std::uint64_t seed,
                            unsigned jobs = 1);

// Columns: p_e,level,task,accuracy,precision,recall,f1,tp,fp,fn
std::string SweepToCsv(std::span<const SweepRow> rows);

}  // namespace cscbench

#endif  // CSCBENCH_CORE_ANALYSIS_HPP_
