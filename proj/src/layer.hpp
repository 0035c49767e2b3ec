#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ascii.hpp"

namespace xtruct {

enum class RepKind : uint8_t { CLASS, OR_LIST, LITERAL };

// Compressed view of one position: a whole character class, an ordered
// frequency list, or a single literal.
struct LayerRep {
  RepKind kind = RepKind::LITERAL;
  CharClass cls = CharClass::PUNCT_OTHER; // CLASS only
  std::string chars;                      // OR_LIST members (decreasing frequency) or the literal
};

// Parameters the compression decision needs.
struct CompressParams {
  double capture_threshold = 0.85;
  double chi_sq_p = 0.05;
};

// Per-position character histogram. Compression output is cached and
// invalidated on every fit; freeze() materializes the cache so finished
// models can be read from many threads.
class SymbolLayer {
public:
  void fit_char(char ch);

  uint64_t total() const { return total_; }
  uint32_t count(char ch) const { return counts_[static_cast<unsigned char>(ch) & 0x7f]; }
  bool observed(char ch) const { return count(ch) > 0; }
  const std::array<uint32_t, 128>& counts() const { return counts_; }

  // Observed characters, ascending byte order.
  std::string observed_chars() const;

  // Class with the largest observed mass; ties go to the lower enum value.
  CharClass majority_class() const;

  double class_proportion(CharClass k) const;

  const LayerRep& rep(const CompressParams& p) const;
  void freeze(const CompressParams& p) const { (void)rep(p); }

  bool operator==(const SymbolLayer& o) const { return counts_ == o.counts_; }

private:
  std::array<uint32_t, 128> counts_{};
  uint64_t total_ = 0;
  std::array<uint64_t, kNumCharClasses> class_totals_{};

  mutable LayerRep rep_;
  mutable bool rep_valid_ = false;
};

// Compression decision on its own (used directly by tests and scoring).
LayerRep compress_layer(const SymbolLayer& layer, const CompressParams& p);

} // namespace xtruct
