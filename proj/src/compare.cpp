#include "compare.hpp"

#include <cmath>

#include "stats.hpp"

namespace xtruct {

double z_for_confidence(double confidence) {
  if (confidence >= 0.99) return 2.576;
  if (confidence >= 0.95) return 1.96;
  return 1.645;
}

namespace {

struct Estimate {
  double value = 0;
  double halfwidth = 0;
};

// Mean of score(draw) with group-mean CLT stopping.
template <typename Draw, typename Score>
Estimate estimate_mean(Draw&& draw, Score&& score, double z) {
  std::vector<double> groups;
  double total = 0;
  std::size_t drawn = 0;
  double halfwidth = 1.0;
  while (drawn < kFitDrawCap) {
    double gsum = 0;
    for (std::size_t i = 0; i < kFitGroupSize; ++i) gsum += score(draw());
    drawn += kFitGroupSize;
    total += gsum;
    groups.push_back(gsum / double(kFitGroupSize));
    if (groups.size() >= 2) {
      halfwidth = z * sample_stdev(groups) / std::sqrt(double(groups.size()));
      if (halfwidth <= kFitPrecision) break;
    }
  }
  return {total / double(drawn), halfwidth};
}

} // namespace

SimilarityPair compare_xtructures(const Xtructure& a, const Xtructure& b, double confidence,
                                  uint64_t seed) {
  double z = z_for_confidence(confidence);
  Rng rng_ab(mix64(seed ^ 0xab));
  Estimate ab = estimate_mean([&] { return a.generate(rng_ab); },
                              [&](const std::string& t) {
                                return 1.0 - xtructure_distance(b, t).normalized;
                              },
                              z);
  Rng rng_ba(mix64(seed ^ 0xba));
  Estimate ba = estimate_mean([&] { return b.generate(rng_ba); },
                              [&](const std::string& t) {
                                return 1.0 - xtructure_distance(a, t).normalized;
                              },
                              z);
  return {ab.value, ba.value, std::max(ab.halfwidth, ba.halfwidth)};
}

RegexComparison compare_with_regex(const Xtructure& x, const FiniteRegex& r, uint64_t seed) {
  Rng rng_xr(mix64(seed ^ 0x58));
  std::size_t hits = 0;
  for (std::size_t i = 0; i < kBernoulliDraws; ++i)
    if (regex_match(r, x.generate(rng_xr))) ++hits;
  double fit_xr = double(hits) / double(kBernoulliDraws);
  double hw_xr = 1.96 * std::sqrt(fit_xr * (1.0 - fit_xr) / double(kBernoulliDraws));

  Rng rng_rx(mix64(seed ^ 0x52));
  Estimate rx = estimate_mean([&] { return xeger_sample(r, rng_rx); },
                              [&](const std::string& t) {
                                return 1.0 - xtructure_distance(x, t).normalized;
                              },
                              1.96);
  return {fit_xr, rx.value, std::max(hw_xr, rx.halfwidth)};
}

} // namespace xtruct
