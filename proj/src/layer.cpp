#include "layer.hpp"

#include <algorithm>

#include "error.hpp"
#include "stats.hpp"

namespace xtruct {

void SymbolLayer::fit_char(char ch) {
  unsigned char c = static_cast<unsigned char>(ch);
  if (c > 127) fail(Errc::non_ascii_input, "non-ASCII byte fed to layer");
  ++counts_[c];
  ++total_;
  ++class_totals_[static_cast<int>(class_of(c))];
  rep_valid_ = false;
}

std::string SymbolLayer::observed_chars() const {
  std::string out;
  for (int c = 0; c < 128; ++c)
    if (counts_[c] > 0) out.push_back(static_cast<char>(c));
  return out;
}

CharClass SymbolLayer::majority_class() const {
  int best = 0;
  for (int k = 1; k < kNumCharClasses; ++k)
    if (class_totals_[k] > class_totals_[best]) best = k;
  return static_cast<CharClass>(best);
}

double SymbolLayer::class_proportion(CharClass k) const {
  if (total_ == 0) return 0.0;
  return double(class_totals_[static_cast<int>(k)]) / double(total_);
}

const LayerRep& SymbolLayer::rep(const CompressParams& p) const {
  if (!rep_valid_) {
    rep_ = compress_layer(*this, p);
    rep_valid_ = true;
  }
  return rep_;
}

LayerRep compress_layer(const SymbolLayer& layer, const CompressParams& p) {
  if (layer.total() == 0) fail(Errc::empty_layer, "compress on empty layer");

  CharClass max_class = layer.majority_class();
  double max_prop = layer.class_proportion(max_class);

  // Candidate histogram for the uniformity test. A dominant class is tested
  // over its own alphabet; a mixed layer over every observed class's alphabet.
  std::string bins_chars;
  if (max_prop > 0.95) {
    bins_chars = class_members(max_class);
  } else {
    for (int k = 0; k < kNumCharClasses; ++k) {
      CharClass kk = static_cast<CharClass>(k);
      if (layer.class_proportion(kk) > 0.0) bins_chars += class_members(kk);
    }
  }

  uint64_t n_hist = 0;
  for (char c : bins_chars) n_hist += layer.count(c);
  std::size_t bins = bins_chars.size();

  // Chi-squared needs a floor of mass per bin to mean anything; thin layers
  // skip straight to the frequency list.
  if (bins >= 2 && n_hist >= 5 * bins) {
    double expected = double(n_hist) / double(bins);
    double stat = 0;
    for (char c : bins_chars) {
      double d = double(layer.count(c)) - expected;
      stat += d * d / expected;
    }
    double pv = chi_sq_p_value(stat, int(bins) - 1);
    if (pv > p.chi_sq_p) {
      LayerRep rep;
      rep.kind = RepKind::CLASS;
      rep.cls = max_class;
      return rep;
    }
  }

  // Frequency list: most common first, ties by byte, cut once the kept mass
  // reaches the capture threshold.
  std::string observed = layer.observed_chars();
  std::sort(observed.begin(), observed.end(), [&](char a, char b) {
    uint32_t ca = layer.count(a), cb = layer.count(b);
    if (ca != cb) return ca > cb;
    return a < b;
  });

  double target = p.capture_threshold * double(layer.total());
  double cum = 0;
  std::string kept;
  for (char c : observed) {
    kept.push_back(c);
    cum += double(layer.count(c));
    if (cum >= target) break;
  }

  LayerRep rep;
  if (kept.size() == 1) {
    rep.kind = RepKind::LITERAL;
    rep.chars = kept;
  } else {
    rep.kind = RepKind::OR_LIST;
    rep.chars = kept;
  }
  return rep;
}

} // namespace xtruct
