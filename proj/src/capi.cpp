#include "xtruct.h"

#include <cstring>
#include <string>
#include <vector>

#include "apps.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "learner.hpp"
#include "regex.hpp"
#include "scoring.hpp"
#include "synth.hpp"
#include "xtructure.hpp"

using namespace xtruct;

struct xt_config {
  Hyperparams params;
};
struct xt_strings {
  std::vector<std::string> values;
};
struct xt_model {
  Xtructure x;
};
struct xt_regex {
  FiniteRegex r;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_pos = -1;

int code_of(Errc e) {
  switch (e) {
    case Errc::ok: return XT_OK;
    case Errc::non_ascii_input: return XT_E_NON_ASCII;
    case Errc::empty_tuple: return XT_E_EMPTY_TUPLE;
    case Errc::empty_layer: return XT_E_EMPTY_LAYER;
    case Errc::empty_xtructure: return XT_E_EMPTY_MODEL;
    case Errc::hyperparameter_mismatch: return XT_E_HYPERPARAMETER_MISMATCH;
    case Errc::empty_sequence: return XT_E_EMPTY_SEQUENCE;
    case Errc::unsupported_construct: return XT_E_UNSUPPORTED_CONSTRUCT;
    case Errc::syntax_error: return XT_E_SYNTAX;
    case Errc::empty_triple_set: return XT_E_EMPTY_TRIPLE_SET;
    case Errc::band_shape_mismatch: return XT_E_BAND_SHAPE;
    case Errc::too_few_models: return XT_E_TOO_FEW_MODELS;
    case Errc::empty_library: return XT_E_EMPTY_LIBRARY;
    case Errc::file_not_found: return XT_E_FILE_NOT_FOUND;
    case Errc::column_not_found: return XT_E_COLUMN_NOT_FOUND;
    case Errc::malformed_csv: return XT_E_MALFORMED_CSV;
    case Errc::write_failure: return XT_E_WRITE_FAILURE;
    case Errc::invalid_argument: return XT_E_INVALID_ARGUMENT;
  }
  return XT_E_INVALID_ARGUMENT;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    g_last_pos = -1;
    fn();
    return XT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    g_last_pos = e.where();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    g_last_pos = -1;
    return XT_E_INVALID_ARGUMENT;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(Errc::invalid_argument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<const Xtructure*> unwrap_models(const xt_model* const* models, size_t n) {
  require(models != nullptr && n > 0, "models must be non-null");
  std::vector<const Xtructure*> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    require(models[i] != nullptr, "model handle is null");
    out.push_back(&models[i]->x);
  }
  return out;
}

std::vector<std::string> unwrap_ids(const char* const* ids, size_t n) {
  require(ids != nullptr, "ids must be non-null");
  std::vector<std::string> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    require(ids[i] != nullptr, "id is null");
    out.emplace_back(ids[i]);
  }
  return out;
}

} // namespace

extern "C" {

const char* xt_version(void) { return "1.0.0"; }

const char* xt_strerror(int code) {
  switch (code) {
    case XT_OK: return "ok";
    case XT_E_NON_ASCII: return "non-ASCII input";
    case XT_E_EMPTY_TUPLE: return "empty tuple";
    case XT_E_EMPTY_LAYER: return "empty layer";
    case XT_E_EMPTY_MODEL: return "empty model";
    case XT_E_HYPERPARAMETER_MISMATCH: return "hyperparameter mismatch";
    case XT_E_EMPTY_SEQUENCE: return "empty sequence";
    case XT_E_UNSUPPORTED_CONSTRUCT: return "unsupported regex construct";
    case XT_E_SYNTAX: return "regex syntax error";
    case XT_E_EMPTY_TRIPLE_SET: return "empty triple set";
    case XT_E_BAND_SHAPE: return "band shape mismatch";
    case XT_E_TOO_FEW_MODELS: return "too few models";
    case XT_E_EMPTY_LIBRARY: return "empty label library";
    case XT_E_FILE_NOT_FOUND: return "file not found";
    case XT_E_COLUMN_NOT_FOUND: return "column not found";
    case XT_E_MALFORMED_CSV: return "malformed CSV";
    case XT_E_WRITE_FAILURE: return "write failure";
    case XT_E_INVALID_ARGUMENT: return "invalid argument";
  }
  return "unknown error";
}

const char* xt_last_error(void) { return g_last_error.c_str(); }
long xt_last_error_pos(void) { return g_last_pos; }
void xt_string_free(char* s) { std::free(s); }
void xt_buffer_free(void* p) { std::free(p); }

/* configuration */

xt_config* xt_config_new(void) { return new xt_config{}; }
void xt_config_free(xt_config* c) { delete c; }

int xt_config_set_max_branches(xt_config* c, int n) {
  return guarded([&] {
    require(c && n >= 1, "max branches must be >= 1");
    c->params.max_branches = n;
  });
}
int xt_config_set_branch_threshold(xt_config* c, double t) {
  return guarded([&] {
    require(c && t > 0, "branch threshold must be positive");
    c->params.branch_threshold = t;
  });
}
int xt_config_set_capture(xt_config* c, double t) {
  return guarded([&] {
    require(c && t > 0 && t <= 1, "capture threshold must be in (0,1]");
    c->params.capture_threshold = t;
  });
}
int xt_config_set_alpha(xt_config* c, double a) {
  return guarded([&] {
    require(c && a >= 0 && a <= 1, "alpha must be in [0,1]");
    c->params.alpha = a;
  });
}
int xt_config_set_chi_sq_p(xt_config* c, double p) {
  return guarded([&] {
    require(c && p > 0 && p < 1, "chi-sq p must be in (0,1)");
    c->params.chi_sq_p = p;
  });
}
int xt_config_set_delimiters(xt_config* c, const char* delims) {
  return guarded([&] {
    require(c && delims, "delimiters must be non-null");
    for (const char* p = delims; *p; ++p)
      if (static_cast<unsigned char>(*p) > 127)
        fail(Errc::non_ascii_input, "delimiters must be ASCII");
    c->params.delimiter_set = delims;
    c->params.canonicalize_delimiters();
  });
}
int xt_config_set_seed(xt_config* c, uint64_t seed) {
  return guarded([&] {
    require(c != nullptr, "config is null");
    c->params.rng_seed = seed;
  });
}
int xt_config_set_sample_cap(xt_config* c, size_t cap) {
  return guarded([&] {
    require(c && cap >= 1, "sample cap must be >= 1");
    c->params.sample_cap = cap;
  });
}

/* string lists */

xt_strings* xt_strings_new(void) { return new xt_strings{}; }
void xt_strings_free(xt_strings* s) { delete s; }

int xt_strings_push(xt_strings* s, const char* value) {
  return guarded([&] {
    require(s && value, "strings/value must be non-null");
    s->values.emplace_back(value);
  });
}
size_t xt_strings_len(const xt_strings* s) { return s ? s->values.size() : 0; }
const char* xt_strings_get(const xt_strings* s, size_t i) {
  if (!s || i >= s->values.size()) return nullptr;
  return s->values[i].c_str();
}

/* ingestion */

int xt_read_column(const char* path, const char* column, int header, size_t max_rows,
                   xt_strings** out) {
  return guarded([&] {
    require(path && column && out, "path/column/out must be non-null");
    ColumnRead r = read_column(path, parse_column_spec(column), header != 0, max_rows);
    auto* s = new xt_strings{std::move(r.values)};
    *out = s;
  });
}

int xt_synth(const char* kind, size_t n, double corrupt_fraction, uint64_t seed,
             xt_strings** out_values, uint8_t** out_truth) {
  return guarded([&] {
    require(kind && out_values, "kind/out must be non-null");
    SynthKind k;
    if (!synth_kind_from_name(kind, k))
      fail(Errc::invalid_argument, std::string("unknown synth kind '") + kind + "'");
    SynthColumn col = synth_generate(k, n, corrupt_fraction, seed);
    if (out_truth) {
      auto* buf = static_cast<uint8_t*>(std::malloc(n ? n : 1));
      std::memcpy(buf, col.corrupt.data(), col.corrupt.size());
      *out_truth = buf;
    }
    *out_values = new xt_strings{std::move(col.values)};
  });
}

/* models */

int xt_learn(const xt_config* cfg, const xt_strings* tuples, int workers, int early_stop,
             xt_learn_stats* stats, xt_model** out) {
  return guarded([&] {
    require(cfg && tuples && out, "config/tuples/out must be non-null");
    LearnResult r = learn_column_parallel(tuples->values, cfg->params, workers, early_stop != 0);
    if (stats) *stats = {r.consumed, r.skipped_empty, r.non_ascii};
    *out = new xt_model{std::move(r.model)};
  });
}

int xt_learn_tuple(xt_model* m, const char* tuple) {
  return guarded([&] {
    require(m && tuple, "model/tuple must be non-null");
    learn_tuple(m->x, tuple);
  });
}

int xt_model_merge(const xt_model* const* models, size_t n, xt_model** out) {
  return guarded([&] {
    require(out != nullptr, "out must be non-null");
    auto ptrs = unwrap_models(models, n);
    std::vector<Xtructure> xs;
    xs.reserve(n);
    for (const Xtructure* x : ptrs) xs.push_back(*x);
    *out = new xt_model{merge_xtructures(xs)};
  });
}

void xt_model_free(xt_model* m) { delete m; }

size_t xt_model_branch_count(const xt_model* m) { return m ? m->x.branches().size() : 0; }
uint64_t xt_model_support(const xt_model* m) { return m ? m->x.total_support() : 0; }
double xt_model_branch_threshold(const xt_model* m) {
  return m ? m->x.branching_threshold() : 0.0;
}

int xt_model_serialize(const xt_model* m, char** out) {
  return guarded([&] {
    require(m && out, "model/out must be non-null");
    *out = dup_string(m->x.serialize());
  });
}
int xt_model_to_json(const xt_model* m, char** out) {
  return guarded([&] {
    require(m && out, "model/out must be non-null");
    *out = dup_string(m->x.to_json_string());
  });
}
int xt_model_from_json(const char* text, xt_model** out) {
  return guarded([&] {
    require(text && out, "text/out must be non-null");
    *out = new xt_model{Xtructure::from_json_string(text)};
  });
}
int xt_model_save(const xt_model* m, const char* path) {
  return guarded([&] {
    require(m && path, "model/path must be non-null");
    m->x.save(path);
  });
}
int xt_model_load(const char* path, xt_model** out) {
  return guarded([&] {
    require(path && out, "path/out must be non-null");
    *out = new xt_model{Xtructure::load(path)};
  });
}

int xt_model_distance(const xt_model* m, const char* tuple, double* raw, double* normalized) {
  return guarded([&] {
    require(m && tuple, "model/tuple must be non-null");
    FitScore f = xtructure_distance(m->x, tuple);
    if (raw) *raw = f.raw;
    if (normalized) *normalized = f.normalized;
  });
}

int xt_model_generate(const xt_model* m, uint64_t seed, size_t n, xt_strings** out) {
  return guarded([&] {
    require(m && out, "model/out must be non-null");
    Rng rng(seed);
    auto* s = new xt_strings{};
    s->values.reserve(n);
    for (size_t i = 0; i < n; ++i) s->values.push_back(m->x.generate(rng));
    *out = s;
  });
}

/* comparison */

int xt_model_compare(const xt_model* a, const xt_model* b, double confidence, uint64_t seed,
                     double* fit_ab, double* fit_ba, double* ci_halfwidth) {
  return guarded([&] {
    require(a && b, "models must be non-null");
    SimilarityPair p = compare_xtructures(a->x, b->x, confidence, seed);
    if (fit_ab) *fit_ab = p.fit_ab;
    if (fit_ba) *fit_ba = p.fit_ba;
    if (ci_halfwidth) *ci_halfwidth = p.ci_halfwidth;
  });
}

int xt_regex_parse(const char* pattern, xt_regex** out) {
  return guarded([&] {
    require(pattern && out, "pattern/out must be non-null");
    *out = new xt_regex{parse_regex(pattern)};
  });
}
void xt_regex_free(xt_regex* r) { delete r; }

int xt_regex_match(const xt_regex* r, const char* s, int* out_match) {
  return guarded([&] {
    require(r && s && out_match, "regex/s/out must be non-null");
    *out_match = regex_match(r->r, s) ? 1 : 0;
  });
}

int xt_regex_sample(const xt_regex* r, uint64_t seed, size_t n, xt_strings** out) {
  return guarded([&] {
    require(r && out, "regex/out must be non-null");
    Rng rng(seed);
    auto* s = new xt_strings{};
    s->values.reserve(n);
    for (size_t i = 0; i < n; ++i) s->values.push_back(xeger_sample(r->r, rng));
    *out = s;
  });
}

int xt_model_compare_regex(const xt_model* m, const xt_regex* r, uint64_t seed, double* fit_xr,
                           double* fit_rx, double* ci_halfwidth) {
  return guarded([&] {
    require(m && r, "model/regex must be non-null");
    RegexComparison c = compare_with_regex(m->x, r->r, seed);
    if (fit_xr) *fit_xr = c.fit_xr;
    if (fit_rx) *fit_rx = c.fit_rx;
    if (ci_halfwidth) *ci_halfwidth = c.ci_halfwidth;
  });
}

/* applications */

int xt_label_report(const char* const* ids, const xt_model* const* models, size_t n_models,
                    const char* const* labels, const char* const* patterns, size_t n_library,
                    double threshold, uint64_t seed, char** out_csv) {
  return guarded([&] {
    require(out_csv != nullptr, "out must be non-null");
    require(labels && patterns, "labels/patterns must be non-null");
    auto model_ptrs = unwrap_models(models, n_models);
    auto id_strs = unwrap_ids(ids, n_models);
    std::vector<LabeledRegex> lib;
    lib.reserve(n_library);
    for (size_t i = 0; i < n_library; ++i) {
      require(labels[i] && patterns[i], "library entry is null");
      lib.push_back({labels[i], patterns[i]});
    }
    auto rows = assign_labels(id_strs, model_ptrs, lib, threshold, seed);
    *out_csv = dup_string(labels_csv(rows));
  });
}

int xt_similar_report(const char* const* ids, const xt_model* const* models, size_t n_models,
                      int method, double threshold, uint64_t seed, char** out_csv) {
  return guarded([&] {
    require(out_csv != nullptr, "out must be non-null");
    require(method == XT_SIMILAR_ALL_PAIRS || method == XT_SIMILAR_LSH, "unknown method");
    auto model_ptrs = unwrap_models(models, n_models);
    auto id_strs = unwrap_ids(ids, n_models);
    SimilarMethod m =
        method == XT_SIMILAR_ALL_PAIRS ? SimilarMethod::ALL_PAIRS : SimilarMethod::LSH;
    auto rows = find_similar(id_strs, model_ptrs, m, threshold, seed);
    *out_csv = dup_string(similar_csv(rows, m));
  });
}

int xt_outlier_score(const xt_model* m, const char* value, double* score) {
  return guarded([&] {
    require(m && value && score, "model/value/score must be non-null");
    *score = outlier_score(m->x, value);
  });
}

int xt_outlier_report(const xt_model* m, const xt_strings* values, double threshold,
                      char** out_csv) {
  return guarded([&] {
    require(m && values && out_csv, "model/values/out must be non-null");
    auto rows = detect_outliers(m->x, values->values, threshold);
    *out_csv = dup_string(outliers_csv(rows));
  });
}

int xt_outlier_pr_report(const xt_model* m, const xt_strings* values, const uint8_t* truth,
                         char** out_csv) {
  return guarded([&] {
    require(m && values && truth && out_csv, "model/values/truth/out must be non-null");
    std::vector<double> scores;
    scores.reserve(values->values.size());
    for (const std::string& v : values->values) scores.push_back(outlier_score(m->x, v));
    std::vector<uint8_t> t(truth, truth + values->values.size());
    *out_csv = dup_string(pr_csv(pr_sweep(scores, t)));
  });
}

} /* extern "C" */
