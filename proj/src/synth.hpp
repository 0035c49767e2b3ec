#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rng.hpp"

namespace xtruct {

enum class SynthKind {
  ZIP,           // 5 uniform digits
  DATE_YMD,      // YYYY-MM-DD
  IPV4,          // dotted quad, uniform octets
  CHEMBL_ID,     // CHEMBL + 5 skew-weighted digits
  PHONE,         // NXX-555-XXXX, weighted area codes
  MIXED_NA_ID,   // 10-digit ids mixed with N/A
  CURRENCY_CODE, // weighted 3-letter codes
};

const char* synth_kind_name(SynthKind k);
bool synth_kind_from_name(const std::string& name, SynthKind& out);

struct SynthColumn {
  std::vector<std::string> values;
  std::vector<uint8_t> corrupt; // 1 where the value was syntactically damaged
};

// Deterministic for (kind, n, corrupt_fraction, seed). Corruption picks one
// of: length change, class flips, delimiter swap.
SynthColumn synth_generate(SynthKind kind, std::size_t n, double corrupt_fraction, uint64_t seed);

// The skewed digit table used by identifier-style families. Positions drawn
// from it sit far from both the uniformity-test and capture-cutoff
// boundaries, so learned representations are stable across sample sizes.
char skew_digit(Rng& rng);

std::string corrupt_value(const std::string& value, Rng& rng);

} // namespace xtruct
