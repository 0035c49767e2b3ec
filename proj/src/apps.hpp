#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "compare.hpp"
#include "signature.hpp"
#include "xtructure.hpp"

namespace xtruct {

struct LabeledRegex {
  std::string label;
  std::string pattern;
};

struct LabelAssignment {
  std::string column_id;
  std::string label; // empty when nothing cleared the threshold
  double score = 0;  // mean of the two directional fits for the chosen label
  bool assigned = false;
};

// Each model gets the library label with the best mean bidirectional fit,
// when that mean clears the threshold. Ties prefer the higher model-to-regex
// fit, then the lexicographically smaller label.
std::vector<LabelAssignment> assign_labels(const std::vector<std::string>& ids,
                                           const std::vector<const Xtructure*>& models,
                                           const std::vector<LabeledRegex>& library,
                                           double threshold, uint64_t seed);

enum class SimilarMethod { ALL_PAIRS, LSH };

struct SimilarPair {
  std::string id_a, id_b;
  double score = 0;  // mean fit (ALL_PAIRS) or estimated Jaccard (LSH)
  double fit_ab = 0; // ALL_PAIRS only
  double fit_ba = 0;
};

struct SimilarStats {
  std::size_t pairwise_comparisons = 0;
  std::size_t signatures_built = 0;
};

std::vector<SimilarPair> find_similar(const std::vector<std::string>& ids,
                                      const std::vector<const Xtructure*>& models,
                                      SimilarMethod method, double threshold, uint64_t seed,
                                      SimilarStats* stats = nullptr);

struct OutlierRow {
  std::size_t row = 0;
  std::string value;
  double score = 0;
  bool flagged = false;
};

inline constexpr double kOutlierThreshold = 0.5;

// Support-weighted mean of per-branch normalized distances; rows above the
// threshold are flagged. The model is never modified.
std::vector<OutlierRow> detect_outliers(const Xtructure& x, const std::vector<std::string>& values,
                                        double threshold = kOutlierThreshold);

double outlier_score(const Xtructure& x, const std::string& value);

struct PrPoint {
  double threshold = 0;
  double precision = 0;
  double recall = 0;
};

// Precision/recall at every distinct score cut (descending).
std::vector<PrPoint> pr_sweep(const std::vector<double>& scores,
                              const std::vector<uint8_t>& truth);

// Area under the precision-recall curve (average precision).
double average_precision(const std::vector<double>& scores, const std::vector<uint8_t>& truth);

// CSV emitters for the report formats the tools print.
std::string labels_csv(const std::vector<LabelAssignment>& rows);
std::string similar_csv(const std::vector<SimilarPair>& rows, SimilarMethod method);
std::string outliers_csv(const std::vector<OutlierRow>& rows);
std::string pr_csv(const std::vector<PrPoint>& rows);

} // namespace xtruct
