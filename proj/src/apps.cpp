#include "apps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"
#include "scoring.hpp"

namespace xtruct {

std::vector<LabelAssignment> assign_labels(const std::vector<std::string>& ids,
                                           const std::vector<const Xtructure*>& models,
                                           const std::vector<LabeledRegex>& library,
                                           double threshold, uint64_t seed) {
  if (library.empty()) fail(Errc::empty_library, "label library is empty");
  if (ids.size() != models.size())
    fail(Errc::invalid_argument, "ids and models must align");

  std::vector<FiniteRegex> compiled;
  compiled.reserve(library.size());
  for (const auto& lr : library) compiled.push_back(parse_regex(lr.pattern));

  std::vector<LabelAssignment> out;
  out.reserve(models.size());
  for (std::size_t m = 0; m < models.size(); ++m) {
    LabelAssignment a;
    a.column_id = ids[m];
    bool have = false;
    double best_score = 0, best_xr = 0;
    std::string best_label;
    for (std::size_t r = 0; r < library.size(); ++r) {
      uint64_t pair_seed = mix64(seed ^ mix64((uint64_t(m) << 32) | r));
      RegexComparison c = compare_with_regex(*models[m], compiled[r], pair_seed);
      double score = 0.5 * (c.fit_xr + c.fit_rx);
      bool better = !have || score > best_score ||
                    (score == best_score && c.fit_xr > best_xr) ||
                    (score == best_score && c.fit_xr == best_xr &&
                     library[r].label < best_label);
      if (better) {
        have = true;
        best_score = score;
        best_xr = c.fit_xr;
        best_label = library[r].label;
      }
    }
    a.score = best_score;
    if (best_score >= threshold) {
      a.label = best_label;
      a.assigned = true;
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<SimilarPair> find_similar(const std::vector<std::string>& ids,
                                      const std::vector<const Xtructure*>& models,
                                      SimilarMethod method, double threshold, uint64_t seed,
                                      SimilarStats* stats) {
  if (models.size() < 2) fail(Errc::too_few_models, "similarity needs at least two models");
  if (ids.size() != models.size())
    fail(Errc::invalid_argument, "ids and models must align");

  SimilarStats local;
  std::vector<SimilarPair> out;

  if (method == SimilarMethod::ALL_PAIRS) {
    for (std::size_t i = 0; i < models.size(); ++i) {
      for (std::size_t j = i + 1; j < models.size(); ++j) {
        uint64_t pair_seed = mix64(seed ^ mix64((uint64_t(i) << 32) | j));
        SimilarityPair c = compare_xtructures(*models[i], *models[j], 0.95, pair_seed);
        ++local.pairwise_comparisons;
        double score = 0.5 * (c.fit_ab + c.fit_ba);
        if (score >= threshold)
          out.push_back({ids[i], ids[j], score, c.fit_ab, c.fit_ba});
      }
    }
  } else {
    std::vector<std::vector<uint64_t>> sigs;
    sigs.reserve(models.size());
    for (const Xtructure* x : models) {
      sigs.push_back(minhash_signature(triple_set(*x), kSignatureHashes, seed));
      ++local.signatures_built;
    }
    auto cands = lsh_candidates(sigs, kLshBands, kLshRows);
    for (auto [i, j] : cands) {
      double est = estimated_jaccard(sigs[i], sigs[j]);
      if (est >= threshold) out.push_back({ids[i], ids[j], est, 0, 0});
    }
  }
  if (stats) *stats = local;
  return out;
}

double outlier_score(const Xtructure& x, const std::string& value) {
  if (x.branches().empty()) fail(Errc::empty_xtructure, "outlier score on empty model");
  std::string clean = value;
  sanitize_ascii(clean);
  Tokenized t = tokenize(clean, x.params().delimiter_set);
  ScoringConfig cfg = ScoringConfig::from(x.params());
  uint64_t total = x.total_support();
  if (total == 0) fail(Errc::empty_xtructure, "model has no support");
  double score = 0;
  for (const Branch& b : x.branches()) {
    double w = double(b.support) / double(total);
    score += w * normalize_distance(branch_distance(t, b, cfg), clean.size());
  }
  return score;
}

std::vector<OutlierRow> detect_outliers(const Xtructure& x, const std::vector<std::string>& values,
                                        double threshold) {
  std::vector<OutlierRow> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    OutlierRow r;
    r.row = i;
    r.value = values[i];
    r.score = outlier_score(x, values[i]);
    r.flagged = r.score > threshold;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PrPoint> pr_sweep(const std::vector<double>& scores,
                              const std::vector<uint8_t>& truth) {
  if (scores.size() != truth.size() || scores.empty())
    fail(Errc::invalid_argument, "scores and truth must align");
  std::size_t positives = 0;
  for (uint8_t t : truth) positives += t ? 1 : 0;

  std::vector<double> cuts = scores;
  std::sort(cuts.begin(), cuts.end(), std::greater<>());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<PrPoint> out;
  for (double cut : cuts) {
    std::size_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] >= cut) (truth[i] ? tp : fp) += 1;
    }
    PrPoint p;
    p.threshold = cut;
    p.precision = (tp + fp) ? double(tp) / double(tp + fp) : 1.0;
    p.recall = positives ? double(tp) / double(positives) : 0.0;
    out.push_back(p);
  }
  return out;
}

double average_precision(const std::vector<double>& scores, const std::vector<uint8_t>& truth) {
  std::vector<PrPoint> curve = pr_sweep(scores, truth);
  double ap = 0, prev_recall = 0;
  for (const PrPoint& p : curve) {
    ap += (p.recall - prev_recall) * p.precision;
    prev_recall = p.recall;
  }
  return ap;
}

namespace {

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << std::fixed << v;
  return ss.str();
}

} // namespace

std::string labels_csv(const std::vector<LabelAssignment>& rows) {
  std::string out = "column_id,label,score\n";
  for (const auto& r : rows) {
    out += csv_escape(r.column_id);
    out.push_back(',');
    out += csv_escape(r.label);
    out.push_back(',');
    out += fmt(r.score);
    out.push_back('\n');
  }
  return out;
}

std::string similar_csv(const std::vector<SimilarPair>& rows, SimilarMethod method) {
  std::string out = method == SimilarMethod::ALL_PAIRS ? "id_a,id_b,fit_ab,fit_ba\n"
                                                       : "id_a,id_b,est_jaccard\n";
  for (const auto& r : rows) {
    out += csv_escape(r.id_a);
    out.push_back(',');
    out += csv_escape(r.id_b);
    out.push_back(',');
    if (method == SimilarMethod::ALL_PAIRS) {
      out += fmt(r.fit_ab);
      out.push_back(',');
      out += fmt(r.fit_ba);
    } else {
      out += fmt(r.score);
    }
    out.push_back('\n');
  }
  return out;
}

std::string outliers_csv(const std::vector<OutlierRow>& rows) {
  std::string out = "row,value,score,flag\n";
  for (const auto& r : rows) {
    out += std::to_string(r.row);
    out.push_back(',');
    out += csv_escape(r.value);
    out.push_back(',');
    out += fmt(r.score);
    out.push_back(',');
    out += r.flagged ? "1" : "0";
    out.push_back('\n');
  }
  return out;
}

std::string pr_csv(const std::vector<PrPoint>& rows) {
  std::string out = "threshold,precision,recall\n";
  for (const auto& r : rows) {
    out += fmt(r.threshold);
    out.push_back(',');
    out += fmt(r.precision);
    out.push_back(',');
    out += fmt(r.recall);
    out.push_back('\n');
  }
  return out;
}

} // namespace xtruct
