#pragma once

// Test-side reference implementations, deliberately independent of the
// library's code paths: the tail probability comes from adaptive Simpson
// quadrature of the density (the library uses incomplete-gamma expansions),
// and the scoring oracle recomputes representations and distances from raw
// layer counts with its own class tables.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "xtructure.hpp"

namespace oracle {

inline double chi_pdf(double x, int df) {
  if (x <= 0) return 0;
  double k2 = 0.5 * df;
  return std::exp((k2 - 1.0) * std::log(x) - 0.5 * x - k2 * std::log(2.0) - std::lgamma(k2));
}

inline double simpson(double a, double b, int df) {
  double m = 0.5 * (a + b);
  return (b - a) / 6.0 * (chi_pdf(a, df) + 4.0 * chi_pdf(m, df) + chi_pdf(b, df));
}

inline double adaptive(double a, double b, int df, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double left = simpson(a, m, df), right = simpson(m, b, df);
  if (depth <= 0 || std::fabs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive(a, m, df, left, tol / 2, depth - 1) +
         adaptive(m, b, df, right, tol / 2, depth - 1);
}

// P(X >= stat) for chi-squared with df degrees of freedom.
inline double chi_sq_tail(double stat, int df) {
  if (stat <= 0) return 1.0;
  double upper = stat + 200.0 + 10.0 * std::sqrt(2.0 * df) + df;
  double rough = simpson(stat, upper, df);
  return adaptive(stat, upper, df, rough, 1e-13, 40);
}

// ---- independent scoring chain ------------------------------------

inline int clazz(char c) {
  const std::string digits = "0123456789";
  const std::string upper = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  const std::string lower = "abcdefghijklmnopqrstuvwxyz";
  if (digits.find(c) != std::string::npos) return 0;
  if (upper.find(c) != std::string::npos) return 1;
  if (lower.find(c) != std::string::npos) return 2;
  if (c == ' ' || c == '\t') return 3;
  return 4;
}

inline std::string members_of(int k) {
  std::string out;
  for (int c = 0x09; c <= 0x7f; ++c) {
    bool printable = (c >= 0x20 && c <= 0x7e) || c == '\t';
    if (!printable) continue;
    if (clazz(char(c)) == k) out.push_back(char(c));
  }
  return out;
}

struct Rep {
  int kind = 2; // 0 class, 1 or-list, 2 literal
  int cls = 4;
  std::string chars;
};

using Counts = std::map<char, long>;

inline Rep compress(const Counts& counts, double capture, double chi_p) {
  long double total = 0;
  std::map<int, long double> by_class;
  for (auto& [c, n] : counts) {
    total += n;
    by_class[clazz(c)] += n;
  }
  int max_class = 0;
  long double max_mass = -1;
  for (int k = 0; k < 5; ++k) {
    long double m = by_class.count(k) ? by_class[k] : 0;
    if (m > max_mass) {
      max_mass = m;
      max_class = k;
    }
  }
  long double max_prop = max_mass / total;

  std::string bin_chars;
  if (max_prop > 0.95) {
    bin_chars = members_of(max_class);
  } else {
    for (int k = 0; k < 5; ++k)
      if (by_class.count(k) && by_class[k] > 0) bin_chars += members_of(k);
  }
  long double n_hist = 0;
  for (char c : bin_chars) {
    auto it = counts.find(c);
    if (it != counts.end()) n_hist += it->second;
  }
  std::size_t bins = bin_chars.size();
  if (bins >= 2 && n_hist >= 5.0L * bins) {
    long double expected = n_hist / bins;
    long double stat = 0;
    for (char c : bin_chars) {
      long double obs = counts.count(c) ? counts.at(c) : 0;
      stat += (obs - expected) * (obs - expected) / expected;
    }
    if (chi_sq_tail(double(stat), int(bins) - 1) > chi_p) {
      Rep r;
      r.kind = 0;
      r.cls = max_class;
      return r;
    }
  }

  std::vector<std::pair<char, long>> sorted(counts.begin(), counts.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  long double cum = 0;
  std::string kept;
  for (auto& [c, n] : sorted) {
    kept.push_back(c);
    cum += n;
    if (cum >= capture * total) break;
  }
  Rep r;
  r.kind = kept.size() == 1 ? 2 : 1;
  r.chars = kept;
  return r;
}

inline Counts counts_of(const xtruct::SymbolLayer& l) {
  Counts out;
  for (int c = 0; c < 128; ++c)
    if (l.counts()[c] > 0) out[char(c)] = l.counts()[c];
  return out;
}

inline double sym_d(char c, const Counts& counts, const Rep& rep, double alpha) {
  int maj = 0;
  {
    std::map<int, long> by_class;
    for (auto& [ch, n] : counts) by_class[clazz(ch)] += n;
    long best = -1;
    for (int k = 0; k < 5; ++k) {
      long m = by_class.count(k) ? by_class[k] : 0;
      if (m > best) {
        best = m;
        maj = k;
      }
    }
  }
  if (clazz(c) != maj) return 1.0;
  if (rep.kind != 0 && counts.find(c) == counts.end()) return alpha;
  return 0.0;
}

inline double token_d(const std::string& token, const xtruct::TokenStructure& k,
                      const xtruct::Hyperparams& p) {
  std::size_t paired = std::min(token.size(), k.layers.size());
  double d = 0;
  for (std::size_t i = 0; i < paired; ++i) {
    Counts c = counts_of(k.layers[i]);
    Rep rep = compress(c, p.capture_threshold, p.chi_sq_p);
    d += sym_d(token[i], c, rep, p.alpha);
  }
  d += std::fabs(double(token.size()) - double(k.layers.size()));
  return d;
}

inline std::pair<std::vector<std::string>, std::string> split(const std::string& s,
                                                              const std::string& delims) {
  std::vector<std::string> tokens{""};
  std::string hinges;
  for (char c : s) {
    if (delims.find(c) != std::string::npos) {
      hinges.push_back(c);
      tokens.push_back("");
    } else {
      tokens.back().push_back(c);
    }
  }
  return {tokens, hinges};
}

inline double branch_d(const std::string& tuple, const xtruct::Branch& b,
                       const xtruct::Hyperparams& p) {
  auto [tokens, hinges] = split(tuple, p.delimiter_set);
  double d = 0;
  std::size_t paired = std::min(tokens.size(), b.tokens.size());
  for (std::size_t i = 0; i < paired; ++i) d += token_d(tokens[i], b.tokens[i], p);
  for (std::size_t i = paired; i < tokens.size(); ++i) d += double(tokens[i].size());
  for (std::size_t i = paired; i < b.tokens.size(); ++i) d += double(b.tokens[i].layers.size());
  std::size_t dp = std::min(hinges.size(), b.delims.size());
  for (std::size_t i = 0; i < dp; ++i)
    if (hinges[i] != b.delims[i]) d += 1.0;
  d += double(std::max(hinges.size(), b.delims.size()) - dp);
  return d;
}

struct Fit {
  double raw;
  double normalized;
};

inline Fit model_d(const std::string& tuple, const xtruct::Xtructure& x) {
  double best = -1;
  for (const auto& b : x.branches()) {
    double d = branch_d(tuple, b, x.params());
    if (best < 0 || d < best) best = d;
  }
  double len = tuple.empty() ? 1.0 : double(tuple.size());
  return {best, std::min(1.0, best / len)};
}

} // namespace oracle
