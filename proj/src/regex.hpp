#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rng.hpp"

namespace xtruct {

// Regex dialect restricted to finite languages: literals, character classes,
// concatenation, alternation, bounded repeats, optionals. Unbounded operators
// ('*', '+', '{m,}') and the '.' wildcard are rejected at parse time.
struct RegexNode {
  enum class Kind { Literal, Class, Concat, Alternation, Repeat, Optional };
  Kind kind = Kind::Literal;
  char lit = 0;
  std::string members; // Class: expanded member set, ascending
  std::vector<std::unique_ptr<RegexNode>> children;
  int rep_min = 0, rep_max = 0; // Repeat

  std::unique_ptr<RegexNode> clone() const;
};

class FiniteRegex {
public:
  const std::string& pattern() const { return pattern_; }
  const RegexNode& root() const { return *root_; }

  FiniteRegex(const FiniteRegex& o) : pattern_(o.pattern_), root_(o.root_->clone()) {}
  FiniteRegex& operator=(const FiniteRegex& o) {
    pattern_ = o.pattern_;
    root_ = o.root_->clone();
    return *this;
  }
  FiniteRegex(FiniteRegex&&) = default;
  FiniteRegex& operator=(FiniteRegex&&) = default;

private:
  friend FiniteRegex parse_regex(const std::string&);
  FiniteRegex(std::string pattern, std::unique_ptr<RegexNode> root)
      : pattern_(std::move(pattern)), root_(std::move(root)) {}

  std::string pattern_;
  std::unique_ptr<RegexNode> root_;
};

// Errors: syntax_error / unsupported_construct, with the byte offset in where().
FiniteRegex parse_regex(const std::string& pattern);

// Anchored full match.
bool regex_match(const FiniteRegex& r, std::string_view s);

// One uniform draw from the language: alternatives, optional arms, repeat
// counts, and class members all drawn uniformly.
std::string xeger_sample(const FiniteRegex& r, Rng& rng);

} // namespace xtruct
