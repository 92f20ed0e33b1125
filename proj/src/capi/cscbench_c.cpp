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

#include "cscbench/cscbench.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "baseline.hpp"
#include "confusion.hpp"
#include "corpus.hpp"
#include "digest.hpp"
#include "error.hpp"
#include "manifest.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"
#include "text.hpp"
#include "utf8.hpp"

namespace cb = cscbench;

struct csc_context {
  cb::RunContext run;
};

struct csc_confusion {
  cb::ConfusionSet set;
};

struct csc_dataset {
  std::vector<cb::ParallelSentence> sentences;
};

struct csc_lm {
  cb::NGramLM lm;
};

struct csc_corrector {
  cb::NGramLM lm;
  cb::ChannelModel channel;
  cb::NoisyChannelCorrector corrector;

  csc_corrector(cb::NGramLM model, cb::ConfusionSet confusion, double p_err, double lambda)
      : lm(std::move(model)), channel(std::move(confusion), p_err), corrector(lm, channel, lambda) {}
};

namespace {

thread_local std::string last_error;
const std::string kVersion(cb::kToolVersion);

csc_status Fail(csc_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs fn and turns C++ exceptions into status codes.
template <typename Fn>
csc_status Guard(Fn&& fn) noexcept {
  try {
    fn();
    return CSC_OK;
  } catch (const cb::ArgumentError& e) {
    return Fail(CSC_ERR_ARGUMENT, e.what());
  } catch (const cb::ParseError& e) {
    return Fail(CSC_ERR_PARSE, e.what());
  } catch (const cb::DataError& e) {
    return Fail(CSC_ERR_DATA, e.what());
  } catch (const cb::IoError& e) {
    return Fail(CSC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CSC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CSC_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(CSC_ERR_INTERNAL, "unknown error");
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) throw cb::ArgumentError(std::string(what) + " must not be NULL");
}

char* CopyOut(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

std::string_view View(const char* text, std::size_t len) {
  if (text == nullptr) {
    if (len != 0) throw cb::ArgumentError("text must not be NULL");
    return {};
  }
  return {text, len};
}

cb::fs::path PathOrEmpty(const char* p) { return p == nullptr ? cb::fs::path() : cb::fs::path(p); }

const cb::RunContext& RunOf(const csc_context* ctx) {
  static const cb::RunContext kDefault;
  return ctx == nullptr ? kDefault : ctx->run;
}

cb::SplitSpec ToSpec(const csc_split_spec& s) {
  cb::SplitSpec spec;
  spec.seed = s.seed;
  spec.key_holdout_frac = s.key_holdout_frac;
  spec.value_key_frac = s.value_key_frac;
  spec.value_holdout_frac = s.value_holdout_frac;
  spec.min_train_values = s.min_train_values;
  return spec;
}

std::size_t MaxLen(std::size_t v) { return v == 0 ? std::numeric_limits<std::size_t>::max() : v; }

csc_metric_block ToBlock(const cb::MetricBlock& b) {
  return {b.accuracy, b.precision, b.recall, b.f1, b.counts.tp, b.counts.fp, b.counts.fn, b.counts.total,
          b.counts.exact_correct};
}

cb::MetricBlock FromBlock(const csc_metric_block& b) {
  cb::MetricBlock m;
  m.accuracy = b.accuracy;
  m.precision = b.precision;
  m.recall = b.recall;
  m.f1 = b.f1;
  m.counts = {b.tp, b.fp, b.fn, b.total, b.exact_correct};
  return m;
}

void FillReport(const cb::EvalReport& r, const std::optional<double>& keep, csc_report* out) {
  out->sentence_detection = ToBlock(r.sentence_detection);
  out->sentence_correction = ToBlock(r.sentence_correction);
  out->character_detection = ToBlock(r.character_detection);
  out->character_correction = ToBlock(r.character_correction);
  out->has_keep_correct = keep.has_value() ? 1 : 0;
  out->keep_correct_accuracy = keep.value_or(0.0);
}

template <typename T>
void Emit(T** out, std::unique_ptr<T> value) {
  *out = value.release();
}

}  // namespace

extern "C" {

const char* csc_version(void) { return kVersion.c_str(); }

const char* csc_status_name(csc_status status) {
  switch (status) {
    case CSC_OK:
      return "ok";
    case CSC_ERR_ARGUMENT:
      return "invalid argument";
    case CSC_ERR_PARSE:
      return "parse error";
    case CSC_ERR_DATA:
      return "data error";
    case CSC_ERR_IO:
      return "i/o error";
    case CSC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* csc_last_error(void) { return last_error.c_str(); }

void csc_string_free(char* s) { std::free(s); }

csc_status csc_context_new(csc_context** out) {
  return Guard([&] {
    Require(out, "out");
    Emit(out, std::make_unique<csc_context>());
  });
}

void csc_context_free(csc_context* ctx) { delete ctx; }

csc_status csc_context_set_jobs(csc_context* ctx, unsigned jobs) {
  return Guard([&] {
    Require(ctx, "ctx");
    if (jobs < 1) throw cb::ArgumentError("jobs must be at least 1");
    ctx->run.jobs = jobs;
  });
}

csc_status csc_context_set_argv(csc_context* ctx, int argc, const char* const* argv) {
  return Guard([&] {
    Require(ctx, "ctx");
    if (argc < 0 || (argc > 0 && argv == nullptr)) throw cb::ArgumentError("bad argument vector");
    ctx->run.argv.assign(argv, argv + argc);
  });
}

csc_status csc_confusion_parse(const char* text, size_t len, csc_confusion** out, size_t* duplicate_lines) {
  return Guard([&] {
    Require(out, "out");
    auto parsed = cb::ParseConfusion(View(text, len));
    if (duplicate_lines) *duplicate_lines = parsed.duplicate_lines;
    Emit(out, std::make_unique<csc_confusion>(csc_confusion{std::move(parsed.set)}));
  });
}

csc_status csc_confusion_load(const char* path, csc_confusion** out, size_t* duplicate_lines) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    Emit(out, std::make_unique<csc_confusion>(csc_confusion{cb::LoadConfusionFile(path, duplicate_lines)}));
  });
}

void csc_confusion_free(csc_confusion* set) { delete set; }

csc_status csc_confusion_stats(const csc_confusion* set, size_t* num_keys, size_t* num_pairs) {
  return Guard([&] {
    Require(set, "set");
    const auto s = cb::Stats(set->set);
    if (num_keys) *num_keys = s.num_keys;
    if (num_pairs) *num_pairs = s.num_pairs;
  });
}

int csc_confusion_contains(const csc_confusion* set, uint32_t key, uint32_t value) {
  return set != nullptr && set->set.Contains(key, value) ? 1 : 0;
}

csc_status csc_confusion_merge(const csc_confusion* a, const csc_confusion* b, csc_confusion** out) {
  return Guard([&] {
    Require(a, "a");
    Require(b, "b");
    Require(out, "out");
    Emit(out, std::make_unique<csc_confusion>(csc_confusion{cb::Merge(a->set, b->set)}));
  });
}

csc_status csc_confusion_filter(const csc_confusion* set, csc_tag want, csc_confusion** out) {
  return Guard([&] {
    Require(set, "set");
    Require(out, "out");
    if (want != CSC_TAG_PHONETIC && want != CSC_TAG_GRAPHIC) {
      throw cb::ArgumentError("filter tag must be CSC_TAG_PHONETIC or CSC_TAG_GRAPHIC");
    }
    Emit(out, std::make_unique<csc_confusion>(csc_confusion{cb::FilterByTag(set->set, static_cast<cb::Tag>(want))}));
  });
}

csc_status csc_confusion_serialize(const csc_confusion* set, char** out_tsv) {
  return Guard([&] {
    Require(set, "set");
    Require(out_tsv, "out_tsv");
    *out_tsv = CopyOut(cb::SerializeConfusion(set->set));
  });
}

void csc_split_spec_default(csc_split_spec* spec) {
  if (spec == nullptr) return;
  const cb::SplitSpec d;
  *spec = {d.seed, d.key_holdout_frac, d.value_key_frac, d.value_holdout_frac, d.min_train_values};
}

csc_status csc_confusion_split(const csc_confusion* set, const csc_split_spec* spec, csc_confusion** train,
                               csc_confusion** unseen_k, csc_confusion** unseen_v) {
  return Guard([&] {
    Require(set, "set");
    Require(spec, "spec");
    Require(train, "train");
    Require(unseen_k, "unseen_k");
    Require(unseen_v, "unseen_v");
    auto r = cb::Split(set->set, ToSpec(*spec));
    auto t = std::make_unique<csc_confusion>(csc_confusion{std::move(r.s_train)});
    auto k = std::make_unique<csc_confusion>(csc_confusion{std::move(r.s_unseen_k)});
    auto v = std::make_unique<csc_confusion>(csc_confusion{std::move(r.s_unseen_v)});
    Emit(train, std::move(t));
    Emit(unseen_k, std::move(k));
    Emit(unseen_v, std::move(v));
  });
}

csc_status csc_dataset_parse(const char* text, size_t len, csc_dataset** out) {
  return Guard([&] {
    Require(out, "out");
    Emit(out, std::make_unique<csc_dataset>(csc_dataset{cb::ParseDataset(View(text, len))}));
  });
}

csc_status csc_dataset_load(const char* path, csc_dataset** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    Emit(out, std::make_unique<csc_dataset>(csc_dataset{cb::LoadDatasetFile(path)}));
  });
}

void csc_dataset_free(csc_dataset* dataset) { delete dataset; }

size_t csc_dataset_size(const csc_dataset* dataset) { return dataset == nullptr ? 0 : dataset->sentences.size(); }

csc_status csc_dataset_stats(const csc_dataset* dataset, size_t* sentences, size_t* errors, size_t* error_pair_types) {
  return Guard([&] {
    Require(dataset, "dataset");
    const auto s = cb::ComputeDatasetStats(dataset->sentences);
    if (sentences) *sentences = s.num_sentences;
    if (errors) *errors = s.num_errors;
    if (error_pair_types) *error_pair_types = s.num_error_pair_types;
  });
}

csc_status csc_dataset_serialize(const csc_dataset* dataset, char** out_tsv) {
  return Guard([&] {
    Require(dataset, "dataset");
    Require(out_tsv, "out_tsv");
    *out_tsv = CopyOut(cb::SerializeDataset(dataset->sentences));
  });
}

csc_status csc_synthesize(const char* corpus_text, size_t len, const csc_confusion* confusion, double p_e,
                          uint64_t seed, unsigned jobs, csc_dataset** out) {
  return Guard([&] {
    Require(confusion, "confusion");
    Require(out, "out");
    const auto corpus = cb::LoadCorpus(View(corpus_text, len));
    auto data = cb::BuildDataset(corpus.sentences, confusion->set, {p_e, seed}, jobs == 0 ? 1 : jobs);
    Emit(out, std::make_unique<csc_dataset>(csc_dataset{std::move(data)}));
  });
}

csc_status csc_coverage_compute(const csc_dataset* test, const csc_dataset* reference, csc_coverage* out) {
  return Guard([&] {
    Require(test, "test");
    Require(reference, "reference");
    Require(out, "out");
    const auto r = cb::Coverage(test->sentences, reference->sentences);
    *out = {r.test_pair_types,     r.covered_pair_types,  r.type_coverage_pct, r.test_pair_tokens,
            r.covered_pair_tokens, r.token_coverage_pct, r.vacuous ? 1 : 0};
  });
}

csc_status csc_coverage_to_json(const csc_coverage* coverage, char** out_json) {
  return Guard([&] {
    Require(coverage, "coverage");
    Require(out_json, "out_json");
    cb::CoverageReport r;
    r.test_pair_types = coverage->test_pair_types;
    r.covered_pair_types = coverage->covered_pair_types;
    r.type_coverage_pct = coverage->type_coverage_pct;
    r.test_pair_tokens = coverage->test_pair_tokens;
    r.covered_pair_tokens = coverage->covered_pair_tokens;
    r.token_coverage_pct = coverage->token_coverage_pct;
    r.vacuous = coverage->vacuous != 0;
    *out_json = CopyOut(cb::CoverageToJson(r).dump(2) + "\n");
  });
}

csc_status csc_evaluate(const csc_dataset* gold, const char* predictions_text, size_t len, csc_report* out) {
  return Guard([&] {
    Require(gold, "gold");
    Require(out, "out");
    const auto preds = cb::ParsePredictions(View(predictions_text, len));
    const auto instances = cb::JoinPredictions(gold->sentences, preds);
    std::optional<double> keep;
    bool all_clean = true;
    for (const auto& s : gold->sentences) all_clean &= s.errors.empty();
    if (all_clean) keep = cb::KeepCorrectAccuracy(instances);
    FillReport(cb::Evaluate(instances), keep, out);
  });
}

csc_status csc_evaluate_files(const char* gold_path, const char* predictions_path, csc_report* out,
                              char** details_tsv) {
  return Guard([&] {
    Require(gold_path, "gold_path");
    Require(predictions_path, "predictions_path");
    Require(out, "out");
    const auto ev = cb::EvaluateFiles(gold_path, predictions_path);
    FillReport(ev.report, ev.keep_correct_accuracy, out);
    if (details_tsv) *details_tsv = CopyOut(cb::DetailRowsTsv(ev.instances));
  });
}

csc_status csc_report_format(const csc_report* report, csc_format format, char** out) {
  return Guard([&] {
    Require(report, "report");
    Require(out, "out");
    const cb::EvalReport r{FromBlock(report->sentence_detection), FromBlock(report->sentence_correction),
                           FromBlock(report->character_detection), FromBlock(report->character_correction)};
    switch (format) {
      case CSC_FORMAT_JSON: {
        auto j = cb::ReportToJson(r);
        if (report->has_keep_correct) j["keep_correct_accuracy"] = report->keep_correct_accuracy;
        *out = CopyOut(j.dump(2) + "\n");
        return;
      }
      case CSC_FORMAT_TSV: {
        std::string s = cb::ReportToTsv(r);
        if (report->has_keep_correct) {
          s += "correct\tkeep\t" + cb::FormatReal(report->keep_correct_accuracy) + "\t\t\t\t\t\t\n";
        }
        *out = CopyOut(s);
        return;
      }
      case CSC_FORMAT_TEXT: {
        std::string s = cb::ReportToText(r);
        if (report->has_keep_correct) {
          s += "keep-correct accuracy: " + cb::FormatReal(report->keep_correct_accuracy) + "\n";
        }
        *out = CopyOut(s);
        return;
      }
    }
    throw cb::ArgumentError("unknown report format");
  });
}

csc_status csc_lm_train(const csc_dataset* dataset, int order, double add_k, csc_lm** out) {
  return Guard([&] {
    Require(dataset, "dataset");
    Require(out, "out");
    std::vector<std::u32string> text;
    text.reserve(dataset->sentences.size());
    for (const auto& s : dataset->sentences) text.push_back(s.target);
    Emit(out, std::make_unique<csc_lm>(csc_lm{cb::TrainLm(text, order, add_k)}));
  });
}

csc_status csc_lm_load(const char* path, csc_lm** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    Emit(out, std::make_unique<csc_lm>(csc_lm{cb::NGramLM::Parse(cb::ReadFile(path))}));
  });
}

void csc_lm_free(csc_lm* lm) { delete lm; }

csc_status csc_lm_info(const csc_lm* lm, int* order, double* add_k, size_t* vocab_size) {
  return Guard([&] {
    Require(lm, "lm");
    if (order) *order = lm->lm.order();
    if (add_k) *add_k = lm->lm.add_k();
    if (vocab_size) *vocab_size = lm->lm.vocab_size();
  });
}

csc_status csc_lm_serialize(const csc_lm* lm, char** out) {
  return Guard([&] {
    Require(lm, "lm");
    Require(out, "out");
    *out = CopyOut(lm->lm.Serialize());
  });
}

csc_status csc_lm_logprob(const csc_lm* lm, const char* context, size_t len, uint32_t next, double* out) {
  return Guard([&] {
    Require(lm, "lm");
    Require(out, "out");
    *out = lm->lm.LogProb(cb::utf8::Decode(View(context, len)), next);
  });
}

csc_status csc_corrector_new(const csc_lm* lm, const csc_confusion* confusion, double p_err, double lambda,
                             csc_corrector** out) {
  return Guard([&] {
    Require(lm, "lm");
    Require(confusion, "confusion");
    Require(out, "out");
    Emit(out, std::make_unique<csc_corrector>(lm->lm, confusion->set, p_err, lambda));
  });
}

void csc_corrector_free(csc_corrector* corrector) { delete corrector; }

csc_status csc_corrector_correct(const csc_corrector* corrector, const char* source, size_t len, char** out) {
  return Guard([&] {
    Require(corrector, "corrector");
    Require(out, "out");
    *out = CopyOut(cb::utf8::Encode(corrector->corrector.Correct(cb::utf8::Decode(View(source, len)))));
  });
}

csc_status csc_split_confusion_files(const csc_context* ctx, const char* confusion_path, const csc_split_spec* spec,
                                     const char* out_dir) {
  return Guard([&] {
    Require(confusion_path, "confusion_path");
    Require(spec, "spec");
    Require(out_dir, "out_dir");
    cb::SplitConfusionFiles(confusion_path, ToSpec(*spec), out_dir, RunOf(ctx));
  });
}

void csc_synthesize_options_default(csc_synthesize_options* opts) {
  if (opts == nullptr) return;
  *opts = {nullptr, nullptr, nullptr, 0.05, 0, 1, 0};
}

csc_status csc_synthesize_file(const csc_context* ctx, const csc_synthesize_options* opts, size_t* sentences,
                               size_t* errors) {
  return Guard([&] {
    Require(opts, "opts");
    Require(opts->corpus_path, "corpus_path");
    Require(opts->confusion_path, "confusion_path");
    Require(opts->out_path, "out_path");
    cb::SynthesizeOptions o;
    o.corpus = opts->corpus_path;
    o.confusion = opts->confusion_path;
    o.out = opts->out_path;
    o.p_e = opts->p_e;
    o.seed = opts->seed;
    o.min_len = opts->min_len;
    o.max_len = MaxLen(opts->max_len);
    const auto summary = cb::SynthesizeFile(o, RunOf(ctx));
    if (sentences) *sentences = summary.sentences;
    if (errors) *errors = summary.errors;
  });
}

void csc_suite_options_default(csc_suite_options* opts) {
  if (opts == nullptr) return;
  static const cb::SuiteConfig kDefaults;
  const cb::MakeSuiteOptions d;
  std::memset(opts, 0, sizeof(*opts));
  opts->p_e = kDefaults.p_e;
  opts->p_e_unseen_k = kDefaults.p_e_unseen_k;
  opts->probs_pe = kDefaults.probs_pe.data();
  opts->probs_pe_count = kDefaults.probs_pe.size();
  opts->n_valid = d.n_valid;
  opts->n_test = d.n_test;
  opts->scontext_size = kDefaults.scontext_size;
  opts->seen_pairs = kDefaults.seen_pairs;
  opts->min_len = 1;
  opts->max_len = 0;
  csc_split_spec_default(&opts->split);
}

csc_status csc_make_suite_files(const csc_context* ctx, const csc_suite_options* opts, char** summary_tsv) {
  return Guard([&] {
    Require(opts, "opts");
    Require(opts->corpus_path, "corpus_path");
    Require(opts->confusion_path, "confusion_path");
    Require(opts->out_dir, "out_dir");
    if (opts->probs_pe_count > 0) Require(opts->probs_pe, "probs_pe");
    cb::MakeSuiteOptions o;
    o.corpus = opts->corpus_path;
    o.confusion = opts->confusion_path;
    o.out_dir = opts->out_dir;
    o.split = ToSpec(opts->split);
    o.suite.master_seed = opts->seed;
    o.suite.p_e = opts->p_e;
    o.suite.p_e_unseen_k = opts->p_e_unseen_k;
    o.suite.probs_pe.assign(opts->probs_pe, opts->probs_pe + opts->probs_pe_count);
    o.suite.scontext_size = opts->scontext_size;
    o.suite.seen_pairs = opts->seen_pairs;
    o.n_valid = opts->n_valid;
    o.n_test = opts->n_test;
    o.min_len = opts->min_len;
    o.max_len = MaxLen(opts->max_len);
    const auto entries = cb::MakeSuiteFiles(o, RunOf(ctx));
    if (summary_tsv) {
      std::string s = "dataset\tfile\tsentences\terrors\terror_pair_types\n";
      for (const auto& e : entries) {
        s += e.name + '\t' + e.file + '\t' + std::to_string(e.stats.num_sentences) + '\t' +
             std::to_string(e.stats.num_errors) + '\t' + std::to_string(e.stats.num_error_pair_types) + '\n';
      }
      *summary_tsv = CopyOut(s);
    }
  });
}

csc_status csc_train_lm_file(const csc_context* ctx, const char* const* dataset_paths, size_t n_datasets,
                             const char* const* corpus_paths, size_t n_corpora, int order, double add_k,
                             const char* out_path, size_t* sentences, size_t* vocab_size) {
  return Guard([&] {
    Require(out_path, "out_path");
    if (n_datasets > 0) Require(dataset_paths, "dataset_paths");
    if (n_corpora > 0) Require(corpus_paths, "corpus_paths");
    cb::TrainLmOptions o;
    for (size_t i = 0; i < n_datasets; ++i) o.datasets.emplace_back(dataset_paths[i]);
    for (size_t i = 0; i < n_corpora; ++i) o.corpora.emplace_back(corpus_paths[i]);
    o.order = order;
    o.add_k = add_k;
    o.out = out_path;
    const auto summary = cb::TrainLmFile(o, RunOf(ctx));
    if (sentences) *sentences = summary.sentences;
    if (vocab_size) *vocab_size = summary.vocab_size;
  });
}

csc_status csc_correct_file(const csc_context* ctx, const char* lm_path, const char* confusion_path,
                            const char* input_path, const char* out_path, double p_err, double lambda,
                            size_t* sentences) {
  return Guard([&] {
    Require(lm_path, "lm_path");
    Require(confusion_path, "confusion_path");
    Require(input_path, "input_path");
    Require(out_path, "out_path");
    const std::size_t n = cb::CorrectFile({lm_path, confusion_path, input_path, out_path, p_err, lambda}, RunOf(ctx));
    if (sentences) *sentences = n;
  });
}

void csc_sweep_options_default(csc_sweep_options* opts) {
  if (opts == nullptr) return;
  static const cb::SweepOptions kDefaults;
  std::memset(opts, 0, sizeof(*opts));
  opts->pe_list = kDefaults.pe_list.data();
  opts->pe_count = kDefaults.pe_list.size();
  opts->corrector = "baseline";
  opts->p_err = kDefaults.p_err;
  opts->lambda = kDefaults.lambda;
}

csc_status csc_sweep_files(const csc_context* ctx, const csc_sweep_options* opts, char** csv_out) {
  return Guard([&] {
    Require(opts, "opts");
    Require(opts->confusion_path, "confusion_path");
    Require(opts->corrector, "corrector");
    if (opts->pe_count > 0) Require(opts->pe_list, "pe_list");
    cb::SweepOptions o;
    o.pool_dataset = PathOrEmpty(opts->pool_dataset_path);
    o.corpus = PathOrEmpty(opts->corpus_path);
    o.confusion = opts->confusion_path;
    o.out = PathOrEmpty(opts->out_path);
    o.pe_list.assign(opts->pe_list, opts->pe_list + opts->pe_count);
    o.corrector = opts->corrector;
    o.lm = PathOrEmpty(opts->lm_path);
    o.p_err = opts->p_err;
    o.lambda = opts->lambda;
    o.seed = opts->seed;
    const auto rows = cb::SweepFiles(o, RunOf(ctx));
    if (csv_out) *csv_out = CopyOut(cb::SweepToCsv(rows));
  });
}

csc_status csc_manifest_verify(const char* manifest_path, size_t* mismatches, char** report) {
  return Guard([&] {
    Require(manifest_path, "manifest_path");
    const auto found = cb::VerifyManifest(manifest_path);
    if (mismatches) *mismatches = found.size();
    if (report) {
      std::string s;
      for (const auto& m : found) {
        s += m.file + "\texpected " + m.expected + "\tgot " + (m.actual.empty() ? "<unreadable>" : m.actual) + "\n";
      }
      *report = CopyOut(s);
    }
  });
}

}  // extern "C"
