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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include <cscbench/cscbench.h>

namespace fs = std::filesystem;

namespace {

std::string Take(char* s) {
  std::string out = s ? s : "";
  csc_string_free(s);
  return out;
}

csc_confusion* Confusion(const std::string& text) {
  csc_confusion* c = nullptr;
  REQUIRE(csc_confusion_parse(text.data(), text.size(), &c, nullptr) == CSC_OK);
  return c;
}

csc_dataset* Dataset(const std::string& text) {
  csc_dataset* d = nullptr;
  REQUIRE(csc_dataset_parse(text.data(), text.size(), &d) == CSC_OK);
  return d;
}

const std::string kData = CSC_DATA_DIR;

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(csc_version()) == "0.3.0");
  CHECK(std::string(csc_status_name(CSC_ERR_PARSE)) == "parse error");
  csc_string_free(nullptr);
  csc_confusion_free(nullptr);
  csc_dataset_free(nullptr);
}

TEST_CASE("confusion through the C API") {
  const std::string text = "是\t适\tP\n规\t现\tG\n是\t适\tG\n";
  csc_confusion* c = nullptr;
  size_t dups = 9;
  REQUIRE(csc_confusion_parse(text.data(), text.size(), &c, &dups) == CSC_OK);
  CHECK(dups == 1);
  size_t keys = 0, pairs = 0;
  CHECK(csc_confusion_stats(c, &keys, &pairs) == CSC_OK);
  CHECK(keys == 2);
  CHECK(pairs == 2);
  CHECK(csc_confusion_contains(c, 0x662F, 0x9002) == 1);
  CHECK(csc_confusion_contains(c, 0x9002, 0x662F) == 0);

  csc_confusion* g = nullptr;
  REQUIRE(csc_confusion_filter(c, CSC_TAG_GRAPHIC, &g) == CSC_OK);
  CHECK(csc_confusion_stats(g, &keys, &pairs) == CSC_OK);
  CHECK(pairs == 2);
  csc_confusion* p = nullptr;
  REQUIRE(csc_confusion_filter(c, CSC_TAG_PHONETIC, &p) == CSC_OK);
  CHECK(csc_confusion_stats(p, &keys, &pairs) == CSC_OK);
  CHECK(pairs == 1);
  csc_confusion* m = nullptr;
  REQUIRE(csc_confusion_merge(p, g, &m) == CSC_OK);
  char* tsv = nullptr;
  REQUIRE(csc_confusion_serialize(m, &tsv) == CSC_OK);
  CHECK(Take(tsv) == "是\t适\tPG\n规\t现\tG\n");
  CHECK(csc_confusion_filter(c, CSC_TAG_BOTH, &g) == CSC_ERR_ARGUMENT);

  csc_split_spec spec;
  csc_split_spec_default(&spec);
  CHECK(spec.key_holdout_frac == 0.23);
  csc_confusion *tr = nullptr, *uk = nullptr, *uv = nullptr;
  spec.key_holdout_frac = 0.5;
  REQUIRE(csc_confusion_split(c, &spec, &tr, &uk, &uv) == CSC_OK);
  CHECK(csc_confusion_stats(uk, &keys, &pairs) == CSC_OK);
  CHECK(keys == 1);
  spec.value_holdout_frac = 0;
  CHECK(csc_confusion_split(c, &spec, &tr, &uk, &uv) == CSC_ERR_ARGUMENT);
  for (auto* h : {c, g, p, m, tr, uk, uv}) csc_confusion_free(h);
}

TEST_CASE("errors map to status codes with a message") {
  csc_confusion* c = nullptr;
  const std::string bad = "a\tb\tP\nab\tc\tG\n";
  CHECK(csc_confusion_parse(bad.data(), bad.size(), &c, nullptr) == CSC_ERR_PARSE);
  CHECK(c == nullptr);
  CHECK(std::string(csc_last_error()).find("line 2") != std::string::npos);
  CHECK(csc_confusion_load("/nonexistent/x.tsv", &c, nullptr) == CSC_ERR_IO);
  CHECK(csc_confusion_stats(nullptr, nullptr, nullptr) == CSC_ERR_ARGUMENT);
  csc_dataset* d = nullptr;
  const std::string ragged = "1\tab\tabc\n";
  CHECK(csc_dataset_parse(ragged.data(), ragged.size(), &d) == CSC_ERR_PARSE);
}

TEST_CASE("evaluate the worked example") {
  csc_dataset* gold = Dataset("1\tAXC\tABC\n2\tDEF\tDEF\n3\tGHI\tGHJ\n");
  const std::string preds = "1\tABC\n2\tDGF\n3\tGHI\n";
  csc_report r;
  REQUIRE(csc_evaluate(gold, preds.data(), preds.size(), &r) == CSC_OK);
  CHECK(r.character_detection.tp == 1);
  CHECK(r.character_detection.fp == 1);
  CHECK(r.character_detection.fn == 1);
  CHECK(r.character_detection.accuracy == doctest::Approx(7.0 / 9.0));
  CHECK(r.sentence_detection.accuracy == doctest::Approx(1.0 / 3.0));
  CHECK(r.sentence_correction.f1 == 0.5);
  CHECK(r.has_keep_correct == 0);
  char* json = nullptr;
  REQUIRE(csc_report_format(&r, CSC_FORMAT_JSON, &json) == CSC_OK);
  CHECK(Take(json).find("\"character_detection\"") != std::string::npos);

  const std::string missing = "1\tABC\n2\tDGF\n";
  CHECK(csc_evaluate(gold, missing.data(), missing.size(), &r) == CSC_ERR_DATA);
  CHECK(std::string(csc_last_error()).find("3") != std::string::npos);
  csc_dataset_free(gold);

  csc_dataset* clean = Dataset("1\tAB\tAB\n2\tCD\tCD\n3\tEF\tEF\n4\tGH\tGH\n");
  const std::string one_changed = "1\tAB\n2\tCX\n3\tEF\n4\tGH\n";
  REQUIRE(csc_evaluate(clean, one_changed.data(), one_changed.size(), &r) == CSC_OK);
  CHECK(r.has_keep_correct == 1);
  CHECK(r.keep_correct_accuracy == 0.75);
  csc_dataset_free(clean);
}

TEST_CASE("synthesize, stats and coverage") {
  csc_confusion* c = Confusion("安\t按\tP\n");
  const std::string corpus = "安安安\n\n你好\n";
  csc_dataset* d = nullptr;
  REQUIRE(csc_synthesize(corpus.data(), corpus.size(), c, 1.0, 5, 2, &d) == CSC_OK);
  CHECK(csc_dataset_size(d) == 2);
  size_t n = 0, errs = 0, types = 0;
  REQUIRE(csc_dataset_stats(d, &n, &errs, &types) == CSC_OK);
  CHECK(n == 2);
  CHECK(errs == 3);
  CHECK(types == 1);
  char* tsv = nullptr;
  REQUIRE(csc_dataset_serialize(d, &tsv) == CSC_OK);
  CHECK(Take(tsv) == "00000001\t按按按\t安安安\n00000003\t你好\t你好\n");
  csc_coverage cov;
  REQUIRE(csc_coverage_compute(d, d, &cov) == CSC_OK);
  CHECK(cov.type_coverage_pct == 100.0);
  CHECK(cov.vacuous == 0);
  char* json = nullptr;
  REQUIRE(csc_coverage_to_json(&cov, &json) == CSC_OK);
  CHECK(Take(json).find("\"headline\"") != std::string::npos);
  CHECK(csc_synthesize(corpus.data(), corpus.size(), c, 1.5, 5, 1, &d) == CSC_ERR_ARGUMENT);
  csc_dataset_free(d);
  csc_confusion_free(c);
}

TEST_CASE("language model and corrector") {
  std::string lines;
  for (int i = 0; i < 50; ++i) lines += std::to_string(i) + "\tabc\tabc\n";
  csc_dataset* d = Dataset(lines);
  csc_lm* lm = nullptr;
  REQUIRE(csc_lm_train(d, 3, 0.1, &lm) == CSC_OK);
  int order = 0;
  double k = 0;
  size_t v = 0;
  REQUIRE(csc_lm_info(lm, &order, &k, &v) == CSC_OK);
  CHECK(order == 3);
  CHECK(v == 5);
  double lp = 0;
  REQUIRE(csc_lm_logprob(lm, "zz", 2, 'a', &lp) == CSC_OK);
  CHECK(lp == doctest::Approx(-std::log(5.0)));

  csc_confusion* c = Confusion("b\tx\tG\n");
  csc_corrector* corr = nullptr;
  REQUIRE(csc_corrector_new(lm, c, 0.05, 1.0, &corr) == CSC_OK);
  csc_lm_free(lm);
  csc_confusion_free(c);
  char* out = nullptr;
  REQUIRE(csc_corrector_correct(corr, "axc", 3, &out) == CSC_OK);
  CHECK(Take(out) == "abc");
  CHECK(csc_corrector_correct(corr, "\xFF", 1, &out) == CSC_ERR_PARSE);
  csc_corrector_free(corr);
  CHECK(csc_lm_train(d, 0, 0.1, &lm) == CSC_ERR_ARGUMENT);
  csc_dataset_free(d);
}

TEST_CASE("file pipeline through the C API") {
  const fs::path dir = fs::temp_directory_path() / "cscbench_capi_pipeline";
  fs::remove_all(dir);
  fs::create_directories(dir);
  csc_context* ctx = nullptr;
  REQUIRE(csc_context_new(&ctx) == CSC_OK);
  const char* argv[] = {"capi_tests", "synthesize"};
  CHECK(csc_context_set_argv(ctx, 2, argv) == CSC_OK);
  CHECK(csc_context_set_jobs(ctx, 0) == CSC_ERR_ARGUMENT);
  CHECK(csc_context_set_jobs(ctx, 2) == CSC_OK);

  const std::string corpus = kData + "/sample_corpus.txt";
  const std::string confusion = kData + "/sample_confusion.tsv";
  const std::string out = (dir / "syn.tsv").string();
  csc_synthesize_options so;
  csc_synthesize_options_default(&so);
  so.corpus_path = corpus.c_str();
  so.confusion_path = confusion.c_str();
  so.out_path = out.c_str();
  so.p_e = 0.3;
  so.seed = 1;
  size_t sentences = 0, errors = 0;
  REQUIRE(csc_synthesize_file(ctx, &so, &sentences, &errors) == CSC_OK);
  CHECK(sentences == 20);
  CHECK(errors > 0);

  size_t bad = 99;
  char* report = nullptr;
  REQUIRE(csc_manifest_verify((out + ".manifest.json").c_str(), &bad, &report) == CSC_OK);
  CHECK(bad == 0);
  Take(report);

  const std::string lm = (dir / "lm.txt").string();
  const char* ds[] = {out.c_str()};
  size_t lm_sentences = 0, vocab = 0;
  REQUIRE(csc_train_lm_file(ctx, ds, 1, nullptr, 0, 3, 0.1, lm.c_str(), &lm_sentences, &vocab) == CSC_OK);
  CHECK(lm_sentences == 20);
  const std::string pred = (dir / "pred.tsv").string();
  REQUIRE(csc_correct_file(ctx, lm.c_str(), confusion.c_str(), out.c_str(), pred.c_str(), 0.05, 1.0, &sentences) ==
          CSC_OK);
  csc_report r;
  char* details = nullptr;
  REQUIRE(csc_evaluate_files(out.c_str(), pred.c_str(), &r, &details) == CSC_OK);
  CHECK(r.sentence_detection.total == 20);
  CHECK(!Take(details).empty());

  csc_sweep_options sw;
  csc_sweep_options_default(&sw);
  const double pes[] = {0.1, 0.5};
  sw.corpus_path = corpus.c_str();
  sw.confusion_path = confusion.c_str();
  sw.pe_list = pes;
  sw.pe_count = 2;
  sw.corrector = "oracle";
  sw.seed = 3;
  char* csv = nullptr;
  REQUIRE(csc_sweep_files(ctx, &sw, &csv) == CSC_OK);
  const std::string text = Take(csv);
  CHECK(text.find("0.5,character,correction,1,1,1,1,") != std::string::npos);
  sw.corrector = "nope";
  CHECK(csc_sweep_files(ctx, &sw, &csv) == CSC_ERR_ARGUMENT);

  csc_context_free(ctx);
  fs::remove_all(dir);
}
