#pragma once

#include <cstdint>

#include "regex.hpp"
#include "scoring.hpp"
#include "xtructure.hpp"

namespace xtruct {

// Sampling constants shared by every estimated fit: groups of 30 generated
// tuples, 95%-style CI at 0.05 precision, and a hard draw cap.
inline constexpr std::size_t kFitGroupSize = 30;
inline constexpr double kFitPrecision = 0.05;
inline constexpr std::size_t kFitDrawCap = 10000;

// Bernoulli sample size for the model-vs-regex direction at conservative
// variance: ceil((1.96/0.1)^2).
inline constexpr std::size_t kBernoulliDraws = 385;

double z_for_confidence(double confidence);

struct SimilarityPair {
  double fit_ab = 0; // how well a's tuples fit b, in [0,1]
  double fit_ba = 0;
  double ci_halfwidth = 0; // wider of the two directions
};

SimilarityPair compare_xtructures(const Xtructure& a, const Xtructure& b,
                                  double confidence = 0.95, uint64_t seed = 0);

struct RegexComparison {
  double fit_xr = 0; // fraction of generated tuples the regex accepts
  double fit_rx = 0; // mean fit of regex samples against the model
  double ci_halfwidth = 0;
};

RegexComparison compare_with_regex(const Xtructure& x, const FiniteRegex& r, uint64_t seed = 0);

} // namespace xtruct
