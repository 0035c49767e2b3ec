#include "synth.hpp"

#include <array>
#include <cstdio>

#include "ascii.hpp"
#include "error.hpp"

namespace xtruct {

const char* synth_kind_name(SynthKind k) {
  switch (k) {
    case SynthKind::ZIP: return "ZIP";
    case SynthKind::DATE_YMD: return "DATE_YMD";
    case SynthKind::IPV4: return "IPV4";
    case SynthKind::CHEMBL_ID: return "CHEMBL_ID";
    case SynthKind::PHONE: return "PHONE";
    case SynthKind::MIXED_NA_ID: return "MIXED_NA_ID";
    case SynthKind::CURRENCY_CODE: return "CURRENCY_CODE";
  }
  return "?";
}

bool synth_kind_from_name(const std::string& name, SynthKind& out) {
  for (SynthKind k : {SynthKind::ZIP, SynthKind::DATE_YMD, SynthKind::IPV4, SynthKind::CHEMBL_ID,
                      SynthKind::PHONE, SynthKind::MIXED_NA_ID, SynthKind::CURRENCY_CODE}) {
    if (name == synth_kind_name(k)) {
      out = k;
      return true;
    }
  }
  return false;
}

namespace {

constexpr std::array<double, 10> kSkewDigitWeights = {0.32, 0.22, 0.16, 0.11, 0.07,
                                                      0.05, 0.03, 0.02, 0.013, 0.007};

std::string skew_digits(Rng& rng, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(skew_digit(rng));
  return out;
}

std::string uniform_digits(Rng& rng, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(char('0' + rng.below(10)));
  return out;
}

std::string make_value(SynthKind kind, Rng& rng) {
  char buf[32];
  switch (kind) {
    case SynthKind::ZIP:
      return uniform_digits(rng, 5);
    case SynthKind::DATE_YMD: {
      int y = 1970 + int(rng.below(50));
      int m = 1 + int(rng.below(12));
      int d = 1 + int(rng.below(28));
      std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, d);
      return buf;
    }
    case SynthKind::IPV4: {
      std::snprintf(buf, sizeof buf, "%d.%d.%d.%d", int(rng.below(256)), int(rng.below(256)),
                    int(rng.below(256)), int(rng.below(256)));
      return buf;
    }
    case SynthKind::CHEMBL_ID:
      return "CHEMBL" + skew_digits(rng, 5);
    case SynthKind::PHONE: {
      static const std::array<const char*, 3> area = {"617", "781", "508"};
      static const std::vector<double> aw = {0.5, 0.3, 0.2};
      Rng& r = rng;
      std::string out = area[r.weighted(aw)];
      out += "-555-";
      out += skew_digits(rng, 4);
      return out;
    }
    case SynthKind::MIXED_NA_ID:
      if (rng.unit() < 0.2) return "N/A";
      return skew_digits(rng, 10);
    case SynthKind::CURRENCY_CODE: {
      static const std::array<const char*, 3> codes = {"USD", "EUR", "JPY"};
      static const std::vector<double> cw = {0.6, 0.3, 0.1};
      return codes[rng.weighted(cw)];
    }
  }
  fail(Errc::invalid_argument, "unknown synth kind");
}

} // namespace

char skew_digit(Rng& rng) {
  double r = rng.unit();
  for (int i = 0; i < 10; ++i) {
    if (r < kSkewDigitWeights[i]) return char('0' + i);
    r -= kSkewDigitWeights[i];
  }
  return '9';
}

std::string corrupt_value(const std::string& value, Rng& rng) {
  int op = int(rng.below(3));
  std::string out = value;

  if (op == 2) {
    // Delimiter swap; fall through to a length change when no delimiter exists.
    static const std::string swaps = "-/.:";
    for (char& c : out) {
      if (swaps.find(c) != std::string::npos) {
        char repl;
        do {
          repl = swaps[rng.below(swaps.size())];
        } while (repl == c);
        c = repl;
        return out;
      }
    }
    op = 0;
  }

  if (op == 0) {
    // Length change: echo a tail slice.
    std::size_t k = std::min<std::size_t>(3, out.size());
    out += out.substr(out.size() - k);
    return out;
  }

  // Class flips at two positions: digits become letters and vice versa.
  for (int flips = 0; flips < 2 && !out.empty(); ++flips) {
    std::size_t p = rng.below(out.size());
    char c = out[p];
    if (class_of(static_cast<unsigned char>(c)) == CharClass::DIGIT)
      out[p] = char('A' + rng.below(26));
    else
      out[p] = char('0' + rng.below(10));
  }
  return out;
}

SynthColumn synth_generate(SynthKind kind, std::size_t n, double corrupt_fraction, uint64_t seed) {
  if (corrupt_fraction < 0 || corrupt_fraction > 1)
    fail(Errc::invalid_argument, "corrupt_fraction outside [0,1]");
  SynthColumn col;
  col.values.reserve(n);
  col.corrupt.reserve(n);
  Rng rng(mix64(seed ^ (uint64_t(kind) + 1)));
  for (std::size_t i = 0; i < n; ++i) {
    std::string v = make_value(kind, rng);
    bool bad = rng.unit() < corrupt_fraction;
    if (bad) v = corrupt_value(v, rng);
    col.values.push_back(std::move(v));
    col.corrupt.push_back(bad ? 1 : 0);
  }
  return col;
}

} // namespace xtruct
