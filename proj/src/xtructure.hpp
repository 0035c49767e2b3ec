#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "layer.hpp"
#include "rng.hpp"

namespace xtruct {

// Everything that shapes learning and scoring. delimiter_set is kept as a
// sorted string of distinct bytes so two models compare canonically.
struct Hyperparams {
  int max_branches = 3;
  double branch_threshold = 0.1; // initial value; the live threshold adapts upward
  double capture_threshold = 0.85;
  double alpha = 0.2;
  double chi_sq_p = 0.05;
  std::string delimiter_set = " #,-./:;@_";
  uint64_t rng_seed = 0;
  std::size_t sample_cap = 64;

  CompressParams compress() const { return {capture_threshold, chi_sq_p}; }
  bool is_delimiter(char c) const { return delimiter_set.find(c) != std::string::npos; }
  void canonicalize_delimiters();

  // Equality over everything a merge partner must share (seed and the adapted
  // threshold may legitimately differ across workers).
  bool merge_compatible(const Hyperparams& o) const;
};

struct Tokenized {
  std::vector<std::string> tokens; // always delims.size() + 1, empties kept
  std::string delims;
};

Tokenized tokenize(std::string_view tuple, const std::string& delimiter_set);

// One aligned run of character positions between hinges.
struct TokenStructure {
  std::vector<SymbolLayer> layers;

  std::size_t length() const { return layers.size(); }
  void fit(std::string_view token); // grows tail layers for longer tokens

  bool operator==(const TokenStructure& o) const { return layers == o.layers; }
};

struct Branch {
  std::vector<TokenStructure> tokens;
  std::string delims; // tokens.size() - 1 entries, first-seen wins
  uint64_t support = 0;
  std::vector<std::string> sample_words;

  void seed(const Tokenized& t);
  // Folds a tokenized tuple into the structure without touching support.
  void absorb(const Tokenized& t);
};

class Xtructure {
public:
  explicit Xtructure(Hyperparams p = {});

  const Hyperparams& params() const { return params_; }
  double branching_threshold() const { return branching_threshold_; }
  const std::vector<Branch>& branches() const { return branches_; }
  uint64_t total_support() const;

  // Pattern string: branches ordered by decreasing support (ties by the
  // rendered string), joined with '|'.
  std::string serialize() const;

  // Draws one tuple: branch by support weight, each position from its
  // empirical character distribution.
  std::string generate(Rng& rng) const;

  // Materializes every layer's compressed representation; after this the
  // model is safe to read concurrently.
  void freeze() const;

  std::string to_json_string() const;
  static Xtructure from_json_string(const std::string& text);
  void save(const std::string& path) const;
  static Xtructure load(const std::string& path);

  // Learner-side access (single owner during learning).
  std::vector<Branch>& branches_mut() { return branches_; }
  void set_branching_threshold(double t) { branching_threshold_ = t; }
  Rng& rng() { return rng_; }
  void set_rng_seed(uint64_t s) {
    params_.rng_seed = s;
    rng_ = Rng(s);
  }

private:
  Hyperparams params_;
  double branching_threshold_;
  std::vector<Branch> branches_;
  Rng rng_;
};

// Pattern-string escaping for literal characters.
void append_escaped(std::string& out, char c);

} // namespace xtruct
