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

// csc: command-line front end over the cscbench C API.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "cscbench/cscbench.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct Failure {
  csc_status status;
};

void Check(csc_status status) {
  if (status != CSC_OK) throw Failure{status};
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { csc_string_free(p); }
  std::string_view view() const { return p ? std::string_view(p) : std::string_view(); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using ConfusionHandle = Handle<csc_confusion, csc_confusion_free>;
using DatasetHandle = Handle<csc_dataset, csc_dataset_free>;
using ContextHandle = Handle<csc_context, csc_context_free>;

void Print(std::string_view s) { std::fwrite(s.data(), 1, s.size(), stdout); }

csc_format ParseFormat(const std::string& f) {
  if (f == "json") return CSC_FORMAT_JSON;
  if (f == "tsv") return CSC_FORMAT_TSV;
  return CSC_FORMAT_TEXT;
}

CLI::Option* AddFormat(CLI::App* app, std::string& format) {
  return app->add_option("--format", format, "Report encoding")
      ->check(CLI::IsMember({"json", "tsv", "text"}))
      ->capture_default_str();
}

void AddSplitFlags(CLI::App* app, csc_split_spec& spec) {
  app->add_option("--key-holdout", spec.key_holdout_frac, "Fraction of keys held out with all their values")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app->add_option("--value-key-frac", spec.value_key_frac, "Fraction of remaining keys that lose values")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app->add_option("--value-holdout", spec.value_holdout_frac, "Fraction of such a key's values held out")
      ->capture_default_str();
  app->add_option("--min-train-values", spec.min_train_values, "Values every key keeps for training")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesize and score Chinese spelling check benchmarks", "csc"};
  app.set_version_flag("--version", std::string(csc_version()));
  app.require_subcommand(1);

  unsigned jobs = 1;
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "Worker threads; outputs do not depend on it")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  // split-confusion
  csc_split_spec split_spec;
  csc_split_spec_default(&split_spec);
  std::string split_confusion;
  std::string split_out_dir;
  auto* split_cmd = app.add_subcommand("split-confusion", "Partition a confusion set into train/unseen parts");
  split_cmd->add_option("--confusion", split_confusion, "Confusion TSV")->required()->check(CLI::ExistingFile);
  split_cmd->add_option("--seed", split_spec.seed, "Master seed")->required();
  split_cmd->add_option("--out-dir", split_out_dir, "Output directory")->required();
  AddSplitFlags(split_cmd, split_spec);

  // synthesize
  csc_synthesize_options synth;
  csc_synthesize_options_default(&synth);
  std::string synth_corpus, synth_confusion, synth_out;
  auto* synth_cmd = app.add_subcommand("synthesize", "Corrupt a clean corpus into a dataset TSV");
  synth_cmd->add_option("--corpus", synth_corpus, "Clean corpus, one sentence per line")
      ->required()
      ->check(CLI::ExistingFile);
  synth_cmd->add_option("--confusion", synth_confusion, "Confusion TSV")->required()->check(CLI::ExistingFile);
  synth_cmd->add_option("--out", synth_out, "Output dataset TSV")->required();
  synth_cmd->add_option("--seed", synth.seed, "Master seed")->required();
  synth_cmd->add_option("--pe", synth.p_e, "Substitution probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  synth_cmd->add_option("--min-len", synth.min_len, "Drop shorter sentences")->capture_default_str();
  synth_cmd->add_option("--max-len", synth.max_len, "Drop longer sentences (0: no limit)")->capture_default_str();
  add_jobs(synth_cmd);

  // make-suite
  csc_suite_options suite;
  csc_suite_options_default(&suite);
  std::vector<double> probs(suite.probs_pe, suite.probs_pe + suite.probs_pe_count);
  std::string suite_corpus, suite_confusion, suite_out_dir;
  auto* suite_cmd = app.add_subcommand("make-suite", "Build the training, validation and test datasets");
  suite_cmd->add_option("--corpus", suite_corpus, "Clean corpus, one sentence per line")
      ->required()
      ->check(CLI::ExistingFile);
  suite_cmd->add_option("--confusion", suite_confusion, "Full confusion TSV")->required()->check(CLI::ExistingFile);
  suite_cmd->add_option("--out-dir", suite_out_dir, "Output directory")->required();
  suite_cmd->add_option("--seed", suite.seed, "Master seed")->required();
  suite_cmd->add_option("--pe", suite.p_e, "Substitution probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  suite_cmd->add_option("--pe-unseen-k", suite.p_e_unseen_k, "Substitution probability of UnseenK")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  suite_cmd->add_option("--probs", probs, "Probs p_e values")->delimiter(',')->capture_default_str();
  suite_cmd->add_option("--n-valid", suite.n_valid, "Validation sentences")->capture_default_str();
  suite_cmd->add_option("--n-test", suite.n_test, "Test-pool sentences")->capture_default_str();
  suite_cmd->add_option("--scontext-size", suite.scontext_size, "Trainset sentences sampled for SContext")
      ->capture_default_str();
  suite_cmd->add_option("--seen-pairs", suite.seen_pairs, "Pairs sampled into S_seen")->capture_default_str();
  suite_cmd->add_option("--min-len", suite.min_len, "Drop shorter sentences")->capture_default_str();
  suite_cmd->add_option("--max-len", suite.max_len, "Drop longer sentences (0: no limit)")->capture_default_str();
  AddSplitFlags(suite_cmd, suite.split);
  add_jobs(suite_cmd);

  // train-lm
  std::vector<std::string> lm_datasets, lm_corpora;
  int lm_order = 3;
  double lm_add_k = 0.1;
  std::string lm_out;
  auto* lm_cmd = app.add_subcommand("train-lm", "Train the character n-gram model of the baseline");
  lm_cmd->add_option("--dataset", lm_datasets, "Dataset TSV; the target side is used")->check(CLI::ExistingFile);
  lm_cmd->add_option("--corpus", lm_corpora, "Clean corpus file")->check(CLI::ExistingFile);
  lm_cmd->add_option("--order", lm_order, "n-gram order")->check(CLI::PositiveNumber)->capture_default_str();
  lm_cmd->add_option("--add-k", lm_add_k, "Additive smoothing constant")->capture_default_str();
  lm_cmd->add_option("--out", lm_out, "Output model file")->required();

  // correct
  std::string cor_lm, cor_confusion, cor_input, cor_out;
  double cor_p_err = 0.05, cor_lambda = 1.0;
  auto* cor_cmd = app.add_subcommand("correct", "Run the noisy-channel baseline over a dataset");
  cor_cmd->add_option("--lm", cor_lm, "Model from train-lm")->required()->check(CLI::ExistingFile);
  cor_cmd->add_option("--confusion", cor_confusion, "Channel confusion TSV")->required()->check(CLI::ExistingFile);
  cor_cmd->add_option("--input", cor_input, "Dataset TSV")->required()->check(CLI::ExistingFile);
  cor_cmd->add_option("--out", cor_out, "Predictions TSV")->required();
  cor_cmd->add_option("--p-err", cor_p_err, "Channel error probability")->capture_default_str();
  cor_cmd->add_option("--lambda", cor_lambda, "Language model weight")->capture_default_str();
  add_jobs(cor_cmd);

  // evaluate
  std::string ev_gold, ev_pred, ev_format = "text", ev_details;
  auto* ev_cmd = app.add_subcommand("evaluate", "Score predictions against a gold dataset");
  ev_cmd->add_option("--gold", ev_gold, "Gold dataset TSV")->required()->check(CLI::ExistingFile);
  ev_cmd->add_option("--pred", ev_pred, "Predictions TSV")->required()->check(CLI::ExistingFile);
  ev_cmd->add_option("--details", ev_details, "Write per-sentence rows to this file");
  AddFormat(ev_cmd, ev_format);

  // coverage
  std::string cov_test, cov_ref, cov_format = "json";
  auto* cov_cmd = app.add_subcommand("coverage", "Share of test error pairs realized in a reference dataset");
  cov_cmd->add_option("--test", cov_test, "Test dataset TSV")->required()->check(CLI::ExistingFile);
  cov_cmd->add_option("--reference", cov_ref, "Reference dataset TSV")->required()->check(CLI::ExistingFile);
  AddFormat(cov_cmd, cov_format);

  // stats
  std::string st_confusion, st_dataset, st_format = "text";
  auto* st_cmd = app.add_subcommand("stats", "Size of a confusion set or a dataset");
  auto* st_conf_opt = st_cmd->add_option("--confusion", st_confusion, "Confusion TSV")->check(CLI::ExistingFile);
  auto* st_data_opt = st_cmd->add_option("--dataset", st_dataset, "Dataset TSV")->check(CLI::ExistingFile);
  st_conf_opt->excludes(st_data_opt);
  st_data_opt->excludes(st_conf_opt);
  AddFormat(st_cmd, st_format);

  // sweep
  csc_sweep_options sw;
  csc_sweep_options_default(&sw);
  std::vector<double> sw_pe(sw.pe_list, sw.pe_list + sw.pe_count);
  std::string sw_pool, sw_corpus, sw_confusion, sw_out, sw_lm, sw_corrector = "baseline";
  auto* sw_cmd = app.add_subcommand("sweep", "Evaluate a corrector across substitution probabilities");
  auto* sw_pool_opt =
      sw_cmd->add_option("--pool", sw_pool, "Dataset TSV whose targets form the pool")->check(CLI::ExistingFile);
  auto* sw_corpus_opt = sw_cmd->add_option("--corpus", sw_corpus, "Clean corpus pool")->check(CLI::ExistingFile);
  sw_pool_opt->excludes(sw_corpus_opt);
  sw_corpus_opt->excludes(sw_pool_opt);
  sw_cmd->add_option("--confusion", sw_confusion, "Confusion TSV")->required()->check(CLI::ExistingFile);
  sw_cmd->add_option("--seed", sw.seed, "Master seed")->required();
  sw_cmd->add_option("--pe-list", sw_pe, "Substitution probabilities")->delimiter(',')->capture_default_str();
  sw_cmd->add_option("--corrector", sw_corrector, "Corrector to sweep")
      ->check(CLI::IsMember({"baseline", "identity", "random", "oracle"}))
      ->capture_default_str();
  sw_cmd->add_option("--lm", sw_lm, "Model for the baseline corrector")->check(CLI::ExistingFile);
  sw_cmd->add_option("--p-err", sw.p_err, "Channel error probability")->capture_default_str();
  sw_cmd->add_option("--lambda", sw.lambda, "Language model weight")->capture_default_str();
  sw_cmd->add_option("--out", sw_out, "Write the CSV here instead of standard output");
  add_jobs(sw_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "csc: %s\n\n%s", e.what(), app.help().c_str());
    return kExitUsage;
  }

  try {
    ContextHandle ctx;
    Check(csc_context_new(&ctx.p));
    Check(csc_context_set_jobs(ctx.p, jobs));
    Check(csc_context_set_argv(ctx.p, argc, argv));

    if (*split_cmd) {
      Check(csc_split_confusion_files(ctx.p, split_confusion.c_str(), &split_spec, split_out_dir.c_str()));
      std::fprintf(stderr, "csc: wrote split to %s\n", split_out_dir.c_str());
    } else if (*synth_cmd) {
      synth.corpus_path = synth_corpus.c_str();
      synth.confusion_path = synth_confusion.c_str();
      synth.out_path = synth_out.c_str();
      size_t sentences = 0, errors = 0;
      Check(csc_synthesize_file(ctx.p, &synth, &sentences, &errors));
      std::fprintf(stderr, "csc: %zu sentences, %zu errors -> %s\n", sentences, errors, synth_out.c_str());
    } else if (*suite_cmd) {
      suite.corpus_path = suite_corpus.c_str();
      suite.confusion_path = suite_confusion.c_str();
      suite.out_dir = suite_out_dir.c_str();
      suite.probs_pe = probs.data();
      suite.probs_pe_count = probs.size();
      OwnedString summary;
      Check(csc_make_suite_files(ctx.p, &suite, &summary.p));
      std::fwrite(summary.view().data(), 1, summary.view().size(), stderr);
    } else if (*lm_cmd) {
      std::vector<const char*> d, c;
      for (const auto& s : lm_datasets) d.push_back(s.c_str());
      for (const auto& s : lm_corpora) c.push_back(s.c_str());
      if (d.empty() && c.empty()) {
        std::fprintf(stderr, "csc: train-lm needs --dataset or --corpus\n\n%s", lm_cmd->help().c_str());
        return kExitUsage;
      }
      size_t sentences = 0, vocab = 0;
      Check(csc_train_lm_file(ctx.p, d.data(), d.size(), c.data(), c.size(), lm_order, lm_add_k, lm_out.c_str(),
                              &sentences, &vocab));
      std::fprintf(stderr, "csc: trained on %zu sentences, vocabulary %zu -> %s\n", sentences, vocab,
                   lm_out.c_str());
    } else if (*cor_cmd) {
      size_t sentences = 0;
      Check(csc_correct_file(ctx.p, cor_lm.c_str(), cor_confusion.c_str(), cor_input.c_str(), cor_out.c_str(),
                             cor_p_err, cor_lambda, &sentences));
      std::fprintf(stderr, "csc: corrected %zu sentences -> %s\n", sentences, cor_out.c_str());
    } else if (*ev_cmd) {
      csc_report report{};
      OwnedString details;
      Check(csc_evaluate_files(ev_gold.c_str(), ev_pred.c_str(), &report, ev_details.empty() ? nullptr : &details.p));
      if (!ev_details.empty()) {
        std::FILE* f = std::fopen(ev_details.c_str(), "wb");
        if (f == nullptr) {
          std::fprintf(stderr, "csc: error: cannot write %s\n", ev_details.c_str());
          return kExitData;
        }
        std::fwrite(details.view().data(), 1, details.view().size(), f);
        std::fclose(f);
      }
      OwnedString out;
      Check(csc_report_format(&report, ParseFormat(ev_format), &out.p));
      Print(out.view());
    } else if (*cov_cmd) {
      DatasetHandle test, ref;
      Check(csc_dataset_load(cov_test.c_str(), &test.p));
      Check(csc_dataset_load(cov_ref.c_str(), &ref.p));
      csc_coverage cov{};
      Check(csc_coverage_compute(test.p, ref.p, &cov));
      if (cov_format == "json") {
        OwnedString out;
        Check(csc_coverage_to_json(&cov, &out.p));
        Print(out.view());
      } else if (cov_format == "tsv") {
        std::printf("granularity\tcovered\ttotal\tpct\ntype\t%zu\t%zu\t%.4f\ntoken\t%zu\t%zu\t%.4f\n",
                    cov.covered_pair_types, cov.test_pair_types, cov.type_coverage_pct, cov.covered_pair_tokens,
                    cov.test_pair_tokens, cov.token_coverage_pct);
      } else {
        std::printf("type coverage:  %.2f%% (%zu / %zu)%s\ntoken coverage: %.2f%% (%zu / %zu)\n",
                    cov.type_coverage_pct, cov.covered_pair_types, cov.test_pair_types,
                    cov.vacuous ? " [vacuous: no test errors]" : "", cov.token_coverage_pct,
                    cov.covered_pair_tokens, cov.test_pair_tokens);
      }
    } else if (*st_cmd) {
      if (st_confusion.empty() == st_dataset.empty()) {
        std::fprintf(stderr, "csc: stats needs exactly one of --confusion or --dataset\n\n%s",
                     st_cmd->help().c_str());
        return kExitUsage;
      }
      if (!st_confusion.empty()) {
        ConfusionHandle set;
        size_t dups = 0, keys = 0, pairs = 0;
        Check(csc_confusion_load(st_confusion.c_str(), &set.p, &dups));
        Check(csc_confusion_stats(set.p, &keys, &pairs));
        if (dups > 0) std::fprintf(stderr, "csc: warning: merged %zu duplicate pair lines\n", dups);
        if (st_format == "json") {
          std::printf("{\n  \"keys\": %zu,\n  \"pairs\": %zu,\n  \"duplicate_lines\": %zu\n}\n", keys, pairs, dups);
        } else if (st_format == "tsv") {
          std::printf("keys\tpairs\n%zu\t%zu\n", keys, pairs);
        } else {
          std::printf("keys:  %zu\npairs: %zu\n", keys, pairs);
        }
      } else {
        DatasetHandle data;
        size_t sentences = 0, errors = 0, types = 0;
        Check(csc_dataset_load(st_dataset.c_str(), &data.p));
        Check(csc_dataset_stats(data.p, &sentences, &errors, &types));
        if (st_format == "json") {
          std::printf("{\n  \"sentences\": %zu,\n  \"errors\": %zu,\n  \"error_pair_types\": %zu\n}\n", sentences,
                      errors, types);
        } else if (st_format == "tsv") {
          std::printf("sentences\terrors\terror_pair_types\n%zu\t%zu\t%zu\n", sentences, errors, types);
        } else {
          std::printf("sentences:        %zu\nerrors:           %zu\nerror pair types: %zu\n", sentences, errors,
                      types);
        }
      }
    } else if (*sw_cmd) {
      if (sw_pool.empty() == sw_corpus.empty()) {
        std::fprintf(stderr, "csc: sweep needs exactly one of --pool or --corpus\n\n%s", sw_cmd->help().c_str());
        return kExitUsage;
      }
      sw.pool_dataset_path = sw_pool.empty() ? nullptr : sw_pool.c_str();
      sw.corpus_path = sw_corpus.empty() ? nullptr : sw_corpus.c_str();
      sw.confusion_path = sw_confusion.c_str();
      sw.out_path = sw_out.empty() ? nullptr : sw_out.c_str();
      sw.pe_list = sw_pe.data();
      sw.pe_count = sw_pe.size();
      sw.corrector = sw_corrector.c_str();
      sw.lm_path = sw_lm.empty() ? nullptr : sw_lm.c_str();
      OwnedString csv;
      Check(csc_sweep_files(ctx.p, &sw, &csv.p));
      if (sw_out.empty()) Print(csv.view());
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "csc: error (%s): %s\n", csc_status_name(f.status), csc_last_error());
    return f.status == CSC_ERR_ARGUMENT ? kExitUsage : kExitData;
  }
  return 0;
}
