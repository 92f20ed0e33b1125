/*
 * Copyright 2026 The cscbench Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of cscbench: synthesis of Chinese spelling check benchmarks from
 * a clean corpus and a confusion set, and scoring of corrector output.
 *
 * Conventions:
 *  - Every fallible function returns a csc_status. On failure the message
 *    is available from csc_last_error() on the same thread until the next
 *    failing call.
 *  - Handles are opaque and created by the _new, _load and _parse functions; free
 *    them with the matching _free function, which accepts NULL.
 *  - Strings returned through char** are NUL-terminated UTF-8 owned by the
 *    caller and released with csc_string_free.
 *  - Handles are immutable after construction and may be shared between
 *    threads; a csc_context must not be modified concurrently.
 */

#ifndef CSCBENCH_CSCBENCH_H_
#define CSCBENCH_CSCBENCH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CSCBENCH_BUILDING_LIBRARY)
#define CSC_API __attribute__((visibility("default")))
#else
#define CSC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csc_status {
  CSC_OK = 0,
  /* An option or argument is out of range, or a required handle is NULL. */
  CSC_ERR_ARGUMENT = 1,
  /* Malformed input text (bad UTF-8, wrong field count, unknown tag...). */
  CSC_ERR_PARSE = 2,
  /* Inputs are well-formed but inconsistent or unusable. */
  CSC_ERR_DATA = 3,
  CSC_ERR_IO = 4,
  CSC_ERR_INTERNAL = 5
} csc_status;

CSC_API const char* csc_version(void);
CSC_API const char* csc_status_name(csc_status status);
CSC_API const char* csc_last_error(void);
CSC_API void csc_string_free(char* s);

/* ---- run context ------------------------------------------------------ */

/* Carries worker count and the argument vector recorded in manifests. */
typedef struct csc_context csc_context;

CSC_API csc_status csc_context_new(csc_context** out);
CSC_API void csc_context_free(csc_context* ctx);
/* jobs >= 1. Outputs do not depend on it. */
CSC_API csc_status csc_context_set_jobs(csc_context* ctx, unsigned jobs);
CSC_API csc_status csc_context_set_argv(csc_context* ctx, int argc, const char* const* argv);

/* ---- confusion sets --------------------------------------------------- */

typedef enum csc_tag { CSC_TAG_PHONETIC = 1, CSC_TAG_GRAPHIC = 2, CSC_TAG_BOTH = 3 } csc_tag;

typedef struct csc_confusion csc_confusion;

/* Lines `key<TAB>value<TAB>tag`, tag one of P, G, PG; '#' lines ignored.
 * duplicate_lines (nullable) receives the number of merged duplicates. */
CSC_API csc_status csc_confusion_parse(const char* text, size_t len, csc_confusion** out,
                                       size_t* duplicate_lines);
CSC_API csc_status csc_confusion_load(const char* path, csc_confusion** out, size_t* duplicate_lines);
CSC_API void csc_confusion_free(csc_confusion* set);
CSC_API csc_status csc_confusion_stats(const csc_confusion* set, size_t* num_keys, size_t* num_pairs);
/* Returns 1 when (key, value) is a pair of the set, else 0. */
CSC_API int csc_confusion_contains(const csc_confusion* set, uint32_t key, uint32_t value);
CSC_API csc_status csc_confusion_merge(const csc_confusion* a, const csc_confusion* b, csc_confusion** out);
/* want is CSC_TAG_PHONETIC or CSC_TAG_GRAPHIC; pairs tagged both always match. */
CSC_API csc_status csc_confusion_filter(const csc_confusion* set, csc_tag want, csc_confusion** out);
CSC_API csc_status csc_confusion_serialize(const csc_confusion* set, char** out_tsv);

typedef struct csc_split_spec {
  uint64_t seed;
  double key_holdout_frac;
  double value_key_frac;
  double value_holdout_frac;
  size_t min_train_values;
} csc_split_spec;

/* Fills the default fractions (0.23, 0.98, 0.13), min_train_values 1, seed 0. */
CSC_API void csc_split_spec_default(csc_split_spec* spec);
CSC_API csc_status csc_confusion_split(const csc_confusion* set, const csc_split_spec* spec, csc_confusion** train,
                                       csc_confusion** unseen_k, csc_confusion** unseen_v);

/* ---- datasets --------------------------------------------------------- */

/* A list of aligned sentences, as in `id<TAB>source<TAB>target` files. */
typedef struct csc_dataset csc_dataset;

CSC_API csc_status csc_dataset_parse(const char* text, size_t len, csc_dataset** out);
CSC_API csc_status csc_dataset_load(const char* path, csc_dataset** out);
CSC_API void csc_dataset_free(csc_dataset* dataset);
CSC_API size_t csc_dataset_size(const csc_dataset* dataset);
CSC_API csc_status csc_dataset_stats(const csc_dataset* dataset, size_t* sentences, size_t* errors,
                                     size_t* error_pair_types);
CSC_API csc_status csc_dataset_serialize(const csc_dataset* dataset, char** out_tsv);

/* Corrupts every line of a plain corpus (one sentence per line). */
CSC_API csc_status csc_synthesize(const char* corpus_text, size_t len, const csc_confusion* confusion, double p_e,
                                  uint64_t seed, unsigned jobs, csc_dataset** out);

typedef struct csc_coverage {
  size_t test_pair_types;
  size_t covered_pair_types;
  double type_coverage_pct;
  size_t test_pair_tokens;
  size_t covered_pair_tokens;
  double token_coverage_pct;
  int vacuous;
} csc_coverage;

CSC_API csc_status csc_coverage_compute(const csc_dataset* test, const csc_dataset* reference, csc_coverage* out);
CSC_API csc_status csc_coverage_to_json(const csc_coverage* coverage, char** out_json);

/* ---- evaluation ------------------------------------------------------- */

typedef struct csc_metric_block {
  double accuracy;
  double precision;
  double recall;
  double f1;
  size_t tp;
  size_t fp;
  size_t fn;
  size_t total;
  size_t exact_correct;
} csc_metric_block;

typedef struct csc_report {
  csc_metric_block sentence_detection;
  csc_metric_block sentence_correction;
  csc_metric_block character_detection;
  csc_metric_block character_correction;
  /* Set when the gold data is entirely error-free. */
  int has_keep_correct;
  double keep_correct_accuracy;
} csc_report;

typedef enum csc_format { CSC_FORMAT_JSON = 0, CSC_FORMAT_TSV = 1, CSC_FORMAT_TEXT = 2 } csc_format;

/* predictions_text holds `id<TAB>prediction` lines joined to gold by id. */
CSC_API csc_status csc_evaluate(const csc_dataset* gold, const char* predictions_text, size_t len, csc_report* out);
/* details_tsv (nullable) receives one row per sentence. */
CSC_API csc_status csc_evaluate_files(const char* gold_path, const char* predictions_path, csc_report* out,
                                      char** details_tsv);
CSC_API csc_status csc_report_format(const csc_report* report, csc_format format, char** out);

/* ---- baseline corrector ----------------------------------------------- */

typedef struct csc_lm csc_lm;

/* Trains on the target side of the dataset. */
CSC_API csc_status csc_lm_train(const csc_dataset* dataset, int order, double add_k, csc_lm** out);
CSC_API csc_status csc_lm_load(const char* path, csc_lm** out);
CSC_API void csc_lm_free(csc_lm* lm);
CSC_API csc_status csc_lm_info(const csc_lm* lm, int* order, double* add_k, size_t* vocab_size);
CSC_API csc_status csc_lm_serialize(const csc_lm* lm, char** out);
/* Natural log of P(next | context); context is UTF-8, left-padded as needed. */
CSC_API csc_status csc_lm_logprob(const csc_lm* lm, const char* context, size_t len, uint32_t next, double* out);

typedef struct csc_corrector csc_corrector;

/* Copies what it needs; lm and confusion may be freed afterwards. */
CSC_API csc_status csc_corrector_new(const csc_lm* lm, const csc_confusion* confusion, double p_err, double lambda,
                                     csc_corrector** out);
CSC_API void csc_corrector_free(csc_corrector* corrector);
CSC_API csc_status csc_corrector_correct(const csc_corrector* corrector, const char* source, size_t len,
                                         char** out);

/* ---- file pipeline ---------------------------------------------------- */
/* Each job writes its outputs plus a manifest with SHA-256 digests. */

/* Writes s_train.tsv, s_unseen_k.tsv, s_unseen_v.tsv, manifest.json. */
CSC_API csc_status csc_split_confusion_files(const csc_context* ctx, const char* confusion_path,
                                             const csc_split_spec* spec, const char* out_dir);

typedef struct csc_synthesize_options {
  const char* corpus_path;
  const char* confusion_path;
  const char* out_path;
  double p_e;
  uint64_t seed;
  size_t min_len;
  /* 0 means unbounded. */
  size_t max_len;
} csc_synthesize_options;

CSC_API void csc_synthesize_options_default(csc_synthesize_options* opts);
CSC_API csc_status csc_synthesize_file(const csc_context* ctx, const csc_synthesize_options* opts,
                                       size_t* sentences, size_t* errors);

typedef struct csc_suite_options {
  const char* corpus_path;
  const char* confusion_path;
  const char* out_dir;
  uint64_t seed;
  double p_e;
  double p_e_unseen_k;
  const double* probs_pe;
  size_t probs_pe_count;
  size_t n_valid;
  size_t n_test;
  size_t scontext_size;
  size_t seen_pairs;
  size_t min_len;
  size_t max_len;
  /* seed is ignored; the split seed derives from the suite seed. */
  csc_split_spec split;
} csc_suite_options;

/* Defaults: p_e 0.05, UnseenK 0.15, Probs {0.01 .. 0.30}, 5000 validation and
 * test sentences, 5000 SContext sentences and seen pairs. */
CSC_API void csc_suite_options_default(csc_suite_options* opts);
CSC_API csc_status csc_make_suite_files(const csc_context* ctx, const csc_suite_options* opts, char** summary_tsv);

CSC_API csc_status csc_train_lm_file(const csc_context* ctx, const char* const* dataset_paths, size_t n_datasets,
                                     const char* const* corpus_paths, size_t n_corpora, int order, double add_k,
                                     const char* out_path, size_t* sentences, size_t* vocab_size);

CSC_API csc_status csc_correct_file(const csc_context* ctx, const char* lm_path, const char* confusion_path,
                                    const char* input_path, const char* out_path, double p_err, double lambda,
                                    size_t* sentences);

typedef struct csc_sweep_options {
  /* Exactly one of pool_dataset_path and corpus_path is non-NULL. */
  const char* pool_dataset_path;
  const char* corpus_path;
  const char* confusion_path;
  /* Nullable: CSV is still returned through csv_out. */
  const char* out_path;
  const double* pe_list;
  size_t pe_count;
  /* "baseline", "identity", "random" or "oracle". */
  const char* corrector;
  const char* lm_path;
  double p_err;
  double lambda;
  uint64_t seed;
} csc_sweep_options;

CSC_API void csc_sweep_options_default(csc_sweep_options* opts);
CSC_API csc_status csc_sweep_files(const csc_context* ctx, const csc_sweep_options* opts, char** csv_out);

/* Recomputes every digest in a manifest; *mismatches counts failures and
 * report (nullable) lists them one per line. */
CSC_API csc_status csc_manifest_verify(const char* manifest_path, size_t* mismatches, char** report);

#ifdef __cplusplus
}
#endif

#endif /* CSCBENCH_CSCBENCH_H_ */
