#include "scoring.hpp"

#include <algorithm>

#include "error.hpp"

namespace xtruct {

double symbol_distance(char c, const SymbolLayer& layer, const LayerRep& rep,
                       const ScoringConfig& cfg) {
  if (class_of(static_cast<unsigned char>(c)) != layer.majority_class()) return 1.0;
  if (rep.kind != RepKind::CLASS && !layer.observed(c)) return cfg.alpha;
  return 0.0;
}

double token_distance(std::string_view token, const TokenStructure& k, const ScoringConfig& cfg) {
  std::size_t paired = std::min(token.size(), k.length());
  double d = 0;
  for (std::size_t i = 0; i < paired; ++i) {
    const SymbolLayer& layer = k.layers[i];
    d += symbol_distance(token[i], layer, layer.rep(cfg.compress), cfg);
  }
  d += double(token.size() > k.length() ? token.size() - k.length() : k.length() - token.size());
  return d;
}

double branch_distance(const Tokenized& t, const Branch& b, const ScoringConfig& cfg) {
  double d = 0;
  std::size_t paired = std::min(t.tokens.size(), b.tokens.size());
  for (std::size_t i = 0; i < paired; ++i) d += token_distance(t.tokens[i], b.tokens[i], cfg);
  for (std::size_t i = paired; i < t.tokens.size(); ++i) d += double(t.tokens[i].size());
  for (std::size_t i = paired; i < b.tokens.size(); ++i) d += double(b.tokens[i].length());

  std::size_t dp = std::min(t.delims.size(), b.delims.size());
  for (std::size_t i = 0; i < dp; ++i)
    if (t.delims[i] != b.delims[i]) d += 1.0;
  d += double(std::max(t.delims.size(), b.delims.size()) - dp);
  return d;
}

double normalize_distance(double raw, std::size_t tuple_len) {
  double len = double(tuple_len == 0 ? 1 : tuple_len);
  return std::min(1.0, raw / len);
}

BranchFit best_branch_fit(const Xtructure& x, const Tokenized& t, std::size_t tuple_len) {
  if (x.branches().empty()) fail(Errc::empty_xtructure, "distance on empty model");
  ScoringConfig cfg = ScoringConfig::from(x.params());
  BranchFit best;
  for (std::size_t i = 0; i < x.branches().size(); ++i) {
    double raw = branch_distance(t, x.branches()[i], cfg);
    double norm = normalize_distance(raw, tuple_len);
    double key = cfg.normalize ? norm : raw;
    double best_key = cfg.normalize ? best.normalized : best.raw;
    if (i == 0 || key < best_key) best = {raw, norm, i};
  }
  return best;
}

FitScore xtructure_distance(const Xtructure& x, std::string_view tuple) {
  std::string clean(tuple);
  sanitize_ascii(clean);
  Tokenized t = tokenize(clean, x.params().delimiter_set);
  BranchFit f = best_branch_fit(x, t, clean.size());
  return {f.raw, f.normalized};
}

} // namespace xtruct
