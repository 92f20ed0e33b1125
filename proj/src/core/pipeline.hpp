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

#ifndef CSCBENCH_CORE_PIPELINE_HPP_
#define CSCBENCH_CORE_PIPELINE_HPP_

// File-level jobs behind the command-line subcommands. Each one reads its
// inputs, writes its outputs and a manifest, and returns a summary.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "confusion.hpp"
#include "corpus.hpp"
#include "metrics.hpp"

namespace cscbench {

namespace fs = std::filesystem;

struct RunContext {
  std::vector<std::string> argv;
  unsigned jobs = 1;
};

ConfusionSet LoadConfusionFile(const fs::path& path, std::size_t* duplicate_lines = nullptr);
std::vector<ParallelSentence> LoadDatasetFile(const fs::path& path);

std::size_t CountEligible(std::span<const CleanSentence> pool, const ConfusionSet& confusion);

// Writes s_train.tsv, s_unseen_k.tsv, s_unseen_v.tsv and manifest.json.
SplitResult SplitConfusionFiles(const fs::path& confusion, const SplitSpec& spec, const fs::path& out_dir,
                                const RunContext& ctx);

struct SynthesizeOptions {
  fs::path corpus;
  fs::path confusion;
  fs::path out;
  double p_e = 0.05;
  std::uint64_t seed = 0;
  std::size_t min_len = 1;
  std::size_t max_len = std::numeric_limits<std::size_t>::max();
};

struct SynthesizeSummary {
  std::size_t sentences = 0;
  std::size_t errors = 0;
  std::size_t eligible = 0;
};

// Writes the dataset and <out>.manifest.json.
SynthesizeSummary SynthesizeFile(const SynthesizeOptions& opts, const RunContext& ctx);

struct MakeSuiteOptions {
  fs::path corpus;
  fs::path confusion;
  fs::path out_dir;
  SplitSpec split;
  SuiteConfig suite;
  std::size_t n_valid = 5000;
  std::size_t n_test = 5000;
  std::size_t min_len = 1;
  std::size_t max_len = std::numeric_limits<std::size_t>::max();
};

struct SuiteEntrySummary {
  std::string name;
  std::string file;
  DatasetStats stats;
};

// Writes <name>.tsv per dataset, confusion/<subset>.tsv and manifest.json.
// The split seed and the suite seed both derive from suite.master_seed.
std::vector<SuiteEntrySummary> MakeSuiteFiles(const MakeSuiteOptions& opts, const RunContext& ctx);

struct TrainLmOptions {
  // Target sides of dataset TSVs and/or plain corpus files.
  std::vector<fs::path> datasets;
  std::vector<fs::path> corpora;
  int order = 3;
  double add_k = 0.1;
  fs::path out;
};

struct TrainLmSummary {
  std::size_t sentences = 0;
  std::size_t vocab_size = 0;
};

TrainLmSummary TrainLmFile(const TrainLmOptions& opts, const RunContext& ctx);

struct CorrectOptions {
  fs::path lm;
  fs::path confusion;
  fs::path input;
  fs::path out;
  double p_err = 0.05;
  double lambda = 1.0;
};

// Runs the baseline corrector over a dataset TSV and writes predictions.
std::size_t CorrectFile(const CorrectOptions& opts, const RunContext& ctx);

struct Evaluation {
  EvalReport report;
  // Set when every gold sentence is error-free.
  std::optional<double> keep_correct_accuracy;
  std::vector<EvalInstance> instances;
};

Evaluation EvaluateFiles(const fs::path& gold, const fs::path& predictions);

struct SweepOptions {
  // Exactly one pool source: a dataset TSV (targets are used) or a corpus.
  fs::path pool_dataset;
  fs::path corpus;
  fs::path confusion;
  fs::path out;
  std::vector<double> pe_list = {0.01, 0.02, 0.05, 0.10, 0.15, 0.20, 0.30};
  // baseline, identity, random or oracle.
  std::string corrector = "baseline";
  fs::path lm;
  double p_err = 0.05;
  double lambda = 1.0;
  std::uint64_t seed = 0;
};

std::vector<SweepRow> SweepFiles(const SweepOptions& opts, const RunContext& ctx);

}  // namespace cscbench

#endif  // CSCBENCH_CORE_PIPELINE_HPP_
