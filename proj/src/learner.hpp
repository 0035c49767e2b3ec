#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "scoring.hpp"
#include "xtructure.hpp"

namespace xtruct {

// Group-mean stopping rule: raw per-tuple scores are pooled in groups of 30,
// group means accumulate, and consumption stops once enough groups exist for
// a 95% CI at 0.1 precision over the group-mean spread.
struct EarlyStop {
  static constexpr std::size_t kGroupSize = 30;
  static constexpr double kZ = 1.96;
  static constexpr double kPrecision = 0.1;

  std::vector<double> latest; // current partial group, size < kGroupSize
  std::vector<double> all;    // completed group means
  bool done = false;

  void observe(double score);
};

// Fits one tuple: joins the closest branch when its normalized distance is
// under the live threshold, otherwise seeds a new branch; over-cap models
// merge their closest pair and the threshold absorbs that pair's fit.
// Returns the pre-fit score (1.0 for the very first tuple).
double learn_tuple(Xtructure& x, std::string_view tuple);

struct LearnResult {
  Xtructure model;
  std::size_t consumed = 0;      // non-empty tuples actually learned
  std::size_t skipped_empty = 0; // empty cells dropped
  std::size_t non_ascii = 0;     // bytes substituted during ingestion
};

LearnResult learn_column(const std::vector<std::string>& tuples, const Hyperparams& params,
                         bool early_stop);

// Contiguous chunk per worker, independently learned, then merged. workers<=1
// (or a short column) falls back to the serial path.
LearnResult learn_column_parallel(const std::vector<std::string>& tuples,
                                  const Hyperparams& params, int workers, bool early_stop);

// Symmetric sample-word fit between two branches of x (the merge criterion).
double pairwise_branch_fit(const Xtructure& x, std::size_t i, std::size_t j);

// Unions branch sets and reduces: pairs fitting under the live threshold
// collapse first (they describe the same serial branch), then the closest
// pairs until the cap holds. Supports sum; the threshold never decreases.
Xtructure merge_xtructures(const std::vector<Xtructure>& xs);

} // namespace xtruct
