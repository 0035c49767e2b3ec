#pragma once

#include <cstddef>
#include <string_view>

#include "xtructure.hpp"

namespace xtruct {

struct ScoringConfig {
  double alpha = 0.2;
  bool normalize = true;
  CompressParams compress;

  static ScoringConfig from(const Hyperparams& p) {
    return {p.alpha, true, p.compress()};
  }
};

struct FitScore {
  double raw = 0;
  double normalized = 0;
};

// Position-level miss cost: 1 for a class break, alpha for an unseen char
// under a non-class representation, 0 otherwise.
double symbol_distance(char c, const SymbolLayer& layer, const LayerRep& rep,
                       const ScoringConfig& cfg);

// Aligned symbol costs plus the length gap.
double token_distance(std::string_view token, const TokenStructure& k, const ScoringConfig& cfg);

// Tokens paired positionally; unpaired tokens cost their full length,
// delimiter disagreements cost 1 each.
double branch_distance(const Tokenized& t, const Branch& b, const ScoringConfig& cfg);

double normalize_distance(double raw, std::size_t tuple_len);

struct BranchFit {
  double raw = 0;
  double normalized = 0;
  std::size_t branch = 0;
};

// Closest branch for an already-tokenized tuple of the given character length.
BranchFit best_branch_fit(const Xtructure& x, const Tokenized& t, std::size_t tuple_len);

// Distance of a raw tuple to the model (min over branches). Non-ASCII bytes
// are substituted before scoring.
FitScore xtructure_distance(const Xtructure& x, std::string_view tuple);

} // namespace xtruct
