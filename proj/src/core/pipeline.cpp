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

#include "pipeline.hpp"

#include <memory>

#include "baseline.hpp"
#include "digest.hpp"
#include "error.hpp"
#include "manifest.hpp"
#include "rng.hpp"
#include "text.hpp"

namespace cscbench {

namespace {

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

fs::path ManifestBeside(const fs::path& out) {
  fs::path m = out;
  m += ".manifest.json";
  return m;
}

nlohmann::ordered_json StatsJson(const DatasetStats& s) {
  nlohmann::ordered_json j;
  j["sentences"] = s.num_sentences;
  j["errors"] = s.num_errors;
  j["error_pair_types"] = s.num_error_pair_types;
  return j;
}

nlohmann::ordered_json SplitSpecJson(const SplitSpec& spec) {
  nlohmann::ordered_json j;
  j["seed"] = spec.seed;
  j["key_holdout_frac"] = spec.key_holdout_frac;
  j["value_key_frac"] = spec.value_key_frac;
  j["value_holdout_frac"] = spec.value_holdout_frac;
  j["min_train_values"] = spec.min_train_values;
  return j;
}

nlohmann::ordered_json ConfusionJson(const ConfusionSet& s) {
  nlohmann::ordered_json j;
  j["keys"] = s.num_keys();
  j["pairs"] = s.num_pairs();
  return j;
}

std::vector<CleanSentence> LoadCorpusFile(const fs::path& path, std::size_t min_len, std::size_t max_len,
                                          LoadReport* report = nullptr) {
  auto loaded = LoadCorpus(ReadFile(path), min_len, max_len);
  if (report) *report = loaded.report;
  return std::move(loaded.sentences);
}

nlohmann::ordered_json LoadReportJson(const LoadReport& r) {
  nlohmann::ordered_json j;
  j["lines"] = r.lines;
  j["kept"] = r.kept;
  j["dropped_empty"] = r.dropped_empty;
  j["dropped_short"] = r.dropped_short;
  j["dropped_long"] = r.dropped_long;
  j["dropped_malformed"] = r.dropped_malformed;
  return j;
}

constexpr const char* kCorruptionNote =
    "Bernoulli(p_e) is drawn only at characters that are keys of the corruption confusion set; "
    "candidates are drawn uniformly; each sentence uses the substream "
    "SubstreamSeed(dataset_seed, sentence_id) with dataset_seed = SubstreamSeed(master_seed, dataset_name)";

}  // namespace

ConfusionSet LoadConfusionFile(const fs::path& path, std::size_t* duplicate_lines) {
  try {
    auto parsed = ParseConfusion(ReadFile(path));
    if (duplicate_lines) *duplicate_lines = parsed.duplicate_lines;
    return std::move(parsed.set);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

std::vector<ParallelSentence> LoadDatasetFile(const fs::path& path) {
  try {
    return ParseDataset(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

std::size_t CountEligible(std::span<const CleanSentence> pool, const ConfusionSet& confusion) {
  std::size_t n = 0;
  for (const auto& s : pool) {
    for (char32_t c : s.text) n += confusion.ContainsKey(c) ? 1 : 0;
  }
  return n;
}

SplitResult SplitConfusionFiles(const fs::path& confusion, const SplitSpec& spec, const fs::path& out_dir,
                                const RunContext& ctx) {
  std::size_t duplicates = 0;
  const ConfusionSet full = LoadConfusionFile(confusion, &duplicates);
  SplitResult split = Split(full, spec);
  EnsureDir(out_dir);

  RunManifest manifest("split-confusion", ctx.argv, spec.seed);
  manifest.AddInput("confusion", confusion);
  const std::pair<const char*, const ConfusionSet*> parts[] = {
      {"s_train.tsv", &split.s_train}, {"s_unseen_k.tsv", &split.s_unseen_k}, {"s_unseen_v.tsv", &split.s_unseen_v}};
  for (const auto& [name, set] : parts) {
    WriteFile(out_dir / name, SerializeConfusion(*set));
    manifest.AddOutput(name, out_dir / name);
  }
  manifest.SetCounter("duplicate_confusion_lines", duplicates);
  manifest.extra()["split_spec"] = SplitSpecJson(spec);
  manifest.extra()["sizes"] = {{"s", ConfusionJson(full)},
                               {"s_train", ConfusionJson(split.s_train)},
                               {"s_unseen_k", ConfusionJson(split.s_unseen_k)},
                               {"s_unseen_v", ConfusionJson(split.s_unseen_v)}};
  manifest.Write(out_dir / "manifest.json");
  return split;
}

SynthesizeSummary SynthesizeFile(const SynthesizeOptions& opts, const RunContext& ctx) {
  LoadReport load;
  const auto pool = LoadCorpusFile(opts.corpus, opts.min_len, opts.max_len, &load);
  std::size_t duplicates = 0;
  const ConfusionSet confusion = LoadConfusionFile(opts.confusion, &duplicates);
  const auto dataset = BuildDataset(pool, confusion, {opts.p_e, opts.seed}, ctx.jobs);
  WriteFile(opts.out, SerializeDataset(dataset));

  const DatasetStats stats = ComputeDatasetStats(dataset);
  SynthesizeSummary summary{stats.num_sentences, stats.num_errors, CountEligible(pool, confusion)};

  RunManifest manifest("synthesize", ctx.argv, opts.seed);
  manifest.AddInput("corpus", opts.corpus);
  manifest.AddInput("confusion", opts.confusion);
  manifest.AddOutput(opts.out.filename().string(), opts.out);
  manifest.SetCounter("sentences", summary.sentences);
  manifest.SetCounter("errors", summary.errors);
  manifest.SetCounter("eligible_characters", summary.eligible);
  manifest.SetCounter("duplicate_confusion_lines", duplicates);
  manifest.extra()["p_e"] = opts.p_e;
  manifest.extra()["corpus_load"] = LoadReportJson(load);
  manifest.extra()["corruption"] = kCorruptionNote;
  manifest.Write(ManifestBeside(opts.out));
  return summary;
}

std::vector<SuiteEntrySummary> MakeSuiteFiles(const MakeSuiteOptions& opts, const RunContext& ctx) {
  LoadReport load;
  const auto sentences = LoadCorpusFile(opts.corpus, opts.min_len, opts.max_len, &load);
  std::size_t duplicates = 0;
  const ConfusionSet full = LoadConfusionFile(opts.confusion, &duplicates);

  const std::uint64_t master = opts.suite.master_seed;
  SplitSpec split_spec = opts.split;
  split_spec.seed = SubstreamSeed(master, "split");
  const SplitResult split = Split(full, split_spec);
  const std::uint64_t partition_seed = SubstreamSeed(master, "partition");
  const CorpusPools pools = PartitionCorpus(sentences, opts.n_valid, opts.n_test, partition_seed);

  SuiteConfig cfg = opts.suite;
  cfg.jobs = ctx.jobs;
  const Suite suite = BuildSuite(pools, split, full, cfg);

  EnsureDir(opts.out_dir);
  EnsureDir(opts.out_dir / "confusion");
  RunManifest manifest("make-suite", ctx.argv, master);
  manifest.AddInput("corpus", opts.corpus);
  manifest.AddInput("confusion", opts.confusion);

  std::vector<SuiteEntrySummary> summary;
  nlohmann::ordered_json datasets = nlohmann::ordered_json::array();
  for (const auto& d : suite.datasets) {
    const std::string file = d.name + ".tsv";
    WriteFile(opts.out_dir / file, SerializeDataset(d.sentences));
    manifest.AddOutput(file, opts.out_dir / file);
    const DatasetStats stats = ComputeDatasetStats(d.sentences);
    summary.push_back({d.name, file, stats});

    nlohmann::ordered_json j;
    j["name"] = d.name;
    j["file"] = file;
    j["confusion"] = d.confusion;
    if (d.p_e >= 0.0) {
      j["p_e"] = d.p_e;
    } else {
      j["p_e"] = nullptr;
    }
    j["seed"] = SubstreamSeed(master, d.name);
    j["stats"] = StatsJson(stats);
    datasets.push_back(std::move(j));
  }

  const std::pair<const char*, const ConfusionSet*> subsets[] = {
      {"s_train", &split.s_train}, {"s_unseen_k", &split.s_unseen_k}, {"s_unseen_v", &split.s_unseen_v},
      {"s_p", &suite.s_p},         {"s_g", &suite.s_g},               {"s_seen", &suite.s_seen}};
  nlohmann::ordered_json sizes;
  sizes["s"] = ConfusionJson(full);
  for (const auto& [name, set] : subsets) {
    const std::string file = std::string("confusion/") + name + ".tsv";
    WriteFile(opts.out_dir / file, SerializeConfusion(*set));
    manifest.AddOutput(file, opts.out_dir / file);
    sizes[name] = ConfusionJson(*set);
  }

  manifest.SetCounter("corpus_sentences", sentences.size());
  manifest.SetCounter("train_pool", pools.train.size());
  manifest.SetCounter("valid_pool", pools.valid.size());
  manifest.SetCounter("test_pool", pools.test.size());
  manifest.SetCounter("duplicate_confusion_lines", duplicates);
  manifest.SetCounter("scontext_singleton_kept", suite.scontext_singleton_kept);
  manifest.extra()["datasets"] = std::move(datasets);
  manifest.extra()["confusion_sizes"] = std::move(sizes);
  manifest.extra()["split_spec"] = SplitSpecJson(split_spec);
  manifest.extra()["partition_seed"] = partition_seed;
  manifest.extra()["scontext_size"] = cfg.scontext_size;
  manifest.extra()["seen_pairs"] = cfg.seen_pairs;
  manifest.extra()["corpus_load"] = LoadReportJson(load);
  manifest.extra()["corruption"] = kCorruptionNote;
  manifest.Write(opts.out_dir / "manifest.json");
  return summary;
}

TrainLmSummary TrainLmFile(const TrainLmOptions& opts, const RunContext& ctx) {
  if (opts.datasets.empty() && opts.corpora.empty()) throw ArgumentError("train-lm needs a dataset or corpus");
  std::vector<std::u32string> text;
  RunManifest manifest("train-lm", ctx.argv, std::nullopt);
  for (const auto& p : opts.datasets) {
    for (auto& s : LoadDatasetFile(p)) text.push_back(std::move(s.target));
    manifest.AddInput("dataset", p);
  }
  for (const auto& p : opts.corpora) {
    for (auto& s : LoadCorpusFile(p, 1, std::numeric_limits<std::size_t>::max())) text.push_back(std::move(s.text));
    manifest.AddInput("corpus", p);
  }
  const NGramLM lm = TrainLm(text, opts.order, opts.add_k);
  WriteFile(opts.out, lm.Serialize());
  manifest.AddOutput(opts.out.filename().string(), opts.out);
  manifest.SetCounter("sentences", text.size());
  manifest.SetCounter("vocab_size", lm.vocab_size());
  manifest.extra()["order"] = opts.order;
  manifest.extra()["add_k"] = opts.add_k;
  manifest.Write(ManifestBeside(opts.out));
  return {text.size(), lm.vocab_size()};
}

std::size_t CorrectFile(const CorrectOptions& opts, const RunContext& ctx) {
  const NGramLM lm = NGramLM::Parse(ReadFile(opts.lm));
  const ChannelModel channel(LoadConfusionFile(opts.confusion), opts.p_err);
  const NoisyChannelCorrector corrector(lm, channel, opts.lambda);
  const auto dataset = LoadDatasetFile(opts.input);
  const auto predictions = RunCorrector(dataset, BaselineCorrector(corrector), ctx.jobs);

  const std::string header = "cscbench noisy-channel baseline " + std::string(kToolVersion) +
                             "\norder=" + std::to_string(lm.order()) + " add_k=" + FormatReal(lm.add_k()) +
                             " lambda=" + FormatReal(opts.lambda) + " p_err=" + FormatReal(opts.p_err) +
                             " decoding=greedy";
  WriteFile(opts.out, SerializePredictions(predictions, header));

  std::size_t changed = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) changed += predictions[i].text != dataset[i].source ? 1 : 0;
  RunManifest manifest("correct", ctx.argv, std::nullopt);
  manifest.AddInput("lm", opts.lm);
  manifest.AddInput("confusion", opts.confusion);
  manifest.AddInput("input", opts.input);
  manifest.AddOutput(opts.out.filename().string(), opts.out);
  manifest.SetCounter("sentences", dataset.size());
  manifest.SetCounter("sentences_changed", changed);
  manifest.Write(ManifestBeside(opts.out));
  return dataset.size();
}

Evaluation EvaluateFiles(const fs::path& gold, const fs::path& predictions) {
  const auto gold_set = LoadDatasetFile(gold);
  std::vector<Prediction> preds;
  try {
    preds = ParsePredictions(ReadFile(predictions));
  } catch (const ParseError& e) {
    throw ParseError(predictions.string() + ": " + e.what(), 0);
  }
  Evaluation ev;
  ev.instances = JoinPredictions(gold_set, preds);
  ev.report = Evaluate(ev.instances);
  bool all_clean = true;
  for (const auto& s : gold_set) all_clean &= s.errors.empty();
  if (all_clean) ev.keep_correct_accuracy = KeepCorrectAccuracy(ev.instances);
  return ev;
}

std::vector<SweepRow> SweepFiles(const SweepOptions& opts, const RunContext& ctx) {
  if (opts.pool_dataset.empty() == opts.corpus.empty()) {
    throw ArgumentError("sweep needs exactly one of a pool dataset or a corpus");
  }
  std::vector<CleanSentence> pool;
  RunManifest manifest("sweep", ctx.argv, opts.seed);
  if (!opts.pool_dataset.empty()) {
    for (auto& s : LoadDatasetFile(opts.pool_dataset)) pool.push_back({std::move(s.id), std::move(s.target)});
    manifest.AddInput("pool", opts.pool_dataset);
  } else {
    pool = LoadCorpusFile(opts.corpus, 1, std::numeric_limits<std::size_t>::max());
    manifest.AddInput("corpus", opts.corpus);
  }
  const ConfusionSet confusion = LoadConfusionFile(opts.confusion);
  manifest.AddInput("confusion", opts.confusion);

  std::unique_ptr<NGramLM> lm;
  std::unique_ptr<ChannelModel> channel;
  std::unique_ptr<NoisyChannelCorrector> baseline;
  std::vector<ParallelSentence> gold;
  Corrector corrector;
  if (opts.corrector == "baseline") {
    if (opts.lm.empty()) throw ArgumentError("the baseline corrector needs a language model");
    lm = std::make_unique<NGramLM>(NGramLM::Parse(ReadFile(opts.lm)));
    manifest.AddInput("lm", opts.lm);
    channel = std::make_unique<ChannelModel>(confusion, opts.p_err);
    baseline = std::make_unique<NoisyChannelCorrector>(*lm, *channel, opts.lambda);
    corrector = BaselineCorrector(*baseline);
  } else if (opts.corrector == "identity") {
    corrector = IdentityCorrector();
  } else if (opts.corrector == "random") {
    channel = std::make_unique<ChannelModel>(confusion, opts.p_err);
    corrector = RandomCandidateCorrector(*channel, SubstreamSeed(opts.seed, "random-corrector"));
  } else if (opts.corrector == "oracle") {
    for (const auto& s : pool) gold.push_back({s.id, s.text, s.text, {}});
    corrector = OracleCorrector(gold);
  } else {
    throw ArgumentError("unknown corrector '" + opts.corrector + "'");
  }

  auto rows = Sweep(pool, confusion, opts.pe_list, corrector, opts.seed, ctx.jobs);
  if (!opts.out.empty()) {
    WriteFile(opts.out, SweepToCsv(rows));
    manifest.AddOutput(opts.out.filename().string(), opts.out);
    manifest.SetCounter("pool_sentences", pool.size());
    manifest.extra()["corrector"] = opts.corrector;
    manifest.extra()["pe_list"] = opts.pe_list;
    manifest.Write(ManifestBeside(opts.out));
  }
  return rows;
}

}  // namespace cscbench
