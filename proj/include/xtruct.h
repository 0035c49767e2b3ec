/*
  xtruct: column pattern models behind a C interface.

  All functions returning int give XT_OK (0) on success or an XT_E_* code;
  xt_last_error() describes the most recent failure on the calling thread and
  xt_last_error_pos() carries a byte offset / line number when one applies.
  Strings returned through char** are heap copies; release them with
  xt_string_free. Handles are opaque and freed by their matching *_free.
*/

#ifndef XTRUCT_H
#define XTRUCT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ------------------------------------------------------------------ */
/* status codes                                                        */

enum {
  XT_OK = 0,
  XT_E_NON_ASCII = 1,
  XT_E_EMPTY_TUPLE = 2,
  XT_E_EMPTY_LAYER = 3,
  XT_E_EMPTY_MODEL = 4,
  XT_E_HYPERPARAMETER_MISMATCH = 5,
  XT_E_EMPTY_SEQUENCE = 6,
  XT_E_UNSUPPORTED_CONSTRUCT = 7,
  XT_E_SYNTAX = 8,
  XT_E_EMPTY_TRIPLE_SET = 9,
  XT_E_BAND_SHAPE = 10,
  XT_E_TOO_FEW_MODELS = 11,
  XT_E_EMPTY_LIBRARY = 12,
  XT_E_FILE_NOT_FOUND = 13,
  XT_E_COLUMN_NOT_FOUND = 14,
  XT_E_MALFORMED_CSV = 15,
  XT_E_WRITE_FAILURE = 16,
  XT_E_INVALID_ARGUMENT = 17,
};

const char* xt_version(void);
const char* xt_strerror(int code);
const char* xt_last_error(void);
long xt_last_error_pos(void);
void xt_string_free(char* s);
void xt_buffer_free(void* p);

/* ------------------------------------------------------------------ */
/* configuration                                                       */

typedef struct xt_config xt_config;

xt_config* xt_config_new(void); /* defaults: 3 branches, 0.1 threshold, 0.85 capture,
                                   0.2 alpha, 0.05 chi-sq p, "-/#.;:,_ @" delimiters */
void xt_config_free(xt_config* c);
int xt_config_set_max_branches(xt_config* c, int n);
int xt_config_set_branch_threshold(xt_config* c, double t);
int xt_config_set_capture(xt_config* c, double t);
int xt_config_set_alpha(xt_config* c, double a);
int xt_config_set_chi_sq_p(xt_config* c, double p);
int xt_config_set_delimiters(xt_config* c, const char* delims);
int xt_config_set_seed(xt_config* c, uint64_t seed);
int xt_config_set_sample_cap(xt_config* c, size_t cap);

/* ------------------------------------------------------------------ */
/* string lists                                                        */

typedef struct xt_strings xt_strings;

xt_strings* xt_strings_new(void);
void xt_strings_free(xt_strings* s);
int xt_strings_push(xt_strings* s, const char* value);
size_t xt_strings_len(const xt_strings* s);
const char* xt_strings_get(const xt_strings* s, size_t i); /* NULL when out of range */

/* ------------------------------------------------------------------ */
/* ingestion                                                           */

/* column: decimal string = 0-based index, anything else = header name. */
int xt_read_column(const char* path, const char* column, int header, size_t max_rows,
                   xt_strings** out);

/* kind: ZIP, DATE_YMD, IPV4, CHEMBL_ID, PHONE, MIXED_NA_ID, CURRENCY_CODE.
   out_truth (optional) receives n bytes, 1 where the value was corrupted;
   free with xt_buffer_free. */
int xt_synth(const char* kind, size_t n, double corrupt_fraction, uint64_t seed,
             xt_strings** out_values, uint8_t** out_truth);

/* ------------------------------------------------------------------ */
/* models                                                              */

typedef struct xt_model xt_model;

typedef struct xt_learn_stats {
  size_t consumed;      /* non-empty tuples learned */
  size_t skipped_empty; /* empty cells dropped */
  size_t non_ascii;     /* bytes substituted at ingestion */
} xt_learn_stats;

/* workers > 1 learns contiguous chunks in parallel and merges; early_stop
   enables the group-mean stopping rule. stats may be NULL. */
int xt_learn(const xt_config* cfg, const xt_strings* tuples, int workers, int early_stop,
             xt_learn_stats* stats, xt_model** out);
int xt_learn_tuple(xt_model* m, const char* tuple);
int xt_model_merge(const xt_model* const* models, size_t n, xt_model** out);
void xt_model_free(xt_model* m);

size_t xt_model_branch_count(const xt_model* m);
uint64_t xt_model_support(const xt_model* m);
double xt_model_branch_threshold(const xt_model* m);

int xt_model_serialize(const xt_model* m, char** out);
int xt_model_to_json(const xt_model* m, char** out);
int xt_model_from_json(const char* text, xt_model** out);
int xt_model_save(const xt_model* m, const char* path);
int xt_model_load(const char* path, xt_model** out);

int xt_model_distance(const xt_model* m, const char* tuple, double* raw, double* normalized);
int xt_model_generate(const xt_model* m, uint64_t seed, size_t n, xt_strings** out);

/* ------------------------------------------------------------------ */
/* comparison                                                          */

int xt_model_compare(const xt_model* a, const xt_model* b, double confidence, uint64_t seed,
                     double* fit_ab, double* fit_ba, double* ci_halfwidth);

typedef struct xt_regex xt_regex;

/* Finite dialect: literals, \d \w \s, [sets], (alternation), {m,n}, ?.
   '*', '+', '{m,}', '.' and anchors are refused with XT_E_UNSUPPORTED_CONSTRUCT. */
int xt_regex_parse(const char* pattern, xt_regex** out);
void xt_regex_free(xt_regex* r);
int xt_regex_match(const xt_regex* r, const char* s, int* out_match);
int xt_regex_sample(const xt_regex* r, uint64_t seed, size_t n, xt_strings** out);

int xt_model_compare_regex(const xt_model* m, const xt_regex* r, uint64_t seed, double* fit_xr,
                           double* fit_rx, double* ci_halfwidth);

/* ------------------------------------------------------------------ */
/* applications (reports are CSV text)                                 */

int xt_label_report(const char* const* ids, const xt_model* const* models, size_t n_models,
                    const char* const* labels, const char* const* patterns, size_t n_library,
                    double threshold, uint64_t seed, char** out_csv);

enum { XT_SIMILAR_ALL_PAIRS = 0, XT_SIMILAR_LSH = 1 };

int xt_similar_report(const char* const* ids, const xt_model* const* models, size_t n_models,
                      int method, double threshold, uint64_t seed, char** out_csv);

int xt_outlier_score(const xt_model* m, const char* value, double* score);
int xt_outlier_report(const xt_model* m, const xt_strings* values, double threshold,
                      char** out_csv);
/* truth: one byte per value, nonzero = known outlier; emits threshold,precision,recall rows. */
int xt_outlier_pr_report(const xt_model* m, const xt_strings* values, const uint8_t* truth,
                         char** out_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* XTRUCT_H */
