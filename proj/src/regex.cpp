#include "regex.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "ascii.hpp"
#include "error.hpp"

namespace xtruct {

std::unique_ptr<RegexNode> RegexNode::clone() const {
  auto n = std::make_unique<RegexNode>();
  n->kind = kind;
  n->lit = lit;
  n->members = members;
  n->rep_min = rep_min;
  n->rep_max = rep_max;
  for (const auto& c : children) n->children.push_back(c->clone());
  return n;
}

namespace {

using NodePtr = std::unique_ptr<RegexNode>;

struct Parser {
  const std::string& src;
  std::size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  bool done() const { return pos >= src.size(); }
  char peek() const { return src[pos]; }

  [[noreturn]] void syntax(const std::string& msg) { fail(Errc::syntax_error, msg, long(pos)); }
  [[noreturn]] void unsupported(const std::string& msg) {
    fail(Errc::unsupported_construct, msg, long(pos));
  }

  NodePtr parse() {
    NodePtr n = alternation();
    if (!done()) syntax("unbalanced ')'");
    return n;
  }

  NodePtr alternation() {
    std::vector<NodePtr> arms;
    arms.push_back(concat());
    while (!done() && peek() == '|') {
      ++pos;
      arms.push_back(concat());
    }
    if (arms.size() == 1) return std::move(arms[0]);
    auto n = std::make_unique<RegexNode>();
    n->kind = RegexNode::Kind::Alternation;
    n->children = std::move(arms);
    return n;
  }

  NodePtr concat() {
    std::vector<NodePtr> parts;
    while (!done() && peek() != '|' && peek() != ')') parts.push_back(repeatable());
    if (parts.size() == 1) return std::move(parts[0]);
    auto n = std::make_unique<RegexNode>();
    n->kind = RegexNode::Kind::Concat;
    n->children = std::move(parts); // empty concat matches only ""
    return n;
  }

  NodePtr repeatable() {
    NodePtr n = atom();
    for (;;) {
      if (done()) return n;
      char c = peek();
      if (c == '?') {
        ++pos;
        auto opt = std::make_unique<RegexNode>();
        opt->kind = RegexNode::Kind::Optional;
        opt->children.push_back(std::move(n));
        n = std::move(opt);
      } else if (c == '{') {
        n = braces(std::move(n));
      } else if (c == '*' || c == '+') {
        unsupported(std::string("unbounded repetition '") + c + "'");
      } else {
        return n;
      }
    }
  }

  NodePtr braces(NodePtr inner) {
    std::size_t open = pos;
    ++pos; // '{'
    int m = integer();
    int n = m;
    if (!done() && peek() == ',') {
      ++pos;
      if (!done() && peek() == '}') {
        pos = open;
        unsupported("open-ended repetition '{m,}'");
      }
      n = integer();
    }
    if (done() || peek() != '}') syntax("expected '}'");
    ++pos;
    if (n < m) {
      pos = open;
      syntax("repetition bounds out of order");
    }
    auto rep = std::make_unique<RegexNode>();
    rep->kind = RegexNode::Kind::Repeat;
    rep->rep_min = m;
    rep->rep_max = n;
    rep->children.push_back(std::move(inner));
    return rep;
  }

  int integer() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) syntax("expected digit");
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 10000) syntax("repetition bound too large");
      ++pos;
    }
    return int(v);
  }

  NodePtr atom() {
    if (done()) syntax("unexpected end of pattern");
    char c = peek();
    switch (c) {
      case '(': {
        ++pos;
        NodePtr inner = alternation();
        if (done() || peek() != ')') syntax("expected ')'");
        ++pos;
        return inner;
      }
      case '[':
        return char_set();
      case '\\':
        return escape();
      case '.':
        unsupported("'.' wildcard");
      case '^':
      case '$':
        unsupported("anchors");
      case '*':
      case '+':
      case '?':
        syntax("quantifier with nothing to repeat");
      case '{':
        syntax("'{' with nothing to repeat");
      case ')':
        syntax("unexpected ')'");
      default: {
        ++pos;
        auto n = std::make_unique<RegexNode>();
        n->kind = RegexNode::Kind::Literal;
        n->lit = c;
        return n;
      }
    }
  }

  NodePtr class_node(std::string members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto n = std::make_unique<RegexNode>();
    n->kind = RegexNode::Kind::Class;
    n->members = std::move(members);
    return n;
  }

  NodePtr escape() {
    ++pos; // backslash
    if (done()) syntax("dangling escape");
    char c = peek();
    ++pos;
    switch (c) {
      case 'd':
        return class_node("0123456789");
      case 'w': {
        std::string m = "_0123456789";
        for (char x = 'A'; x <= 'Z'; ++x) m.push_back(x);
        for (char x = 'a'; x <= 'z'; ++x) m.push_back(x);
        return class_node(std::move(m));
      }
      case 's':
        return class_node("\t ");
      default:
        if (std::isalnum(static_cast<unsigned char>(c))) {
          --pos;
          syntax(std::string("unknown escape '\\") + c + "'");
        }
        auto n = std::make_unique<RegexNode>();
        n->kind = RegexNode::Kind::Literal;
        n->lit = c;
        return n;
    }
  }

  NodePtr char_set() {
    ++pos; // '['
    if (!done() && peek() == '^') unsupported("negated set");
    std::string members;
    while (!done() && peek() != ']') {
      char lo = peek();
      if (lo == '\\') {
        ++pos;
        if (done()) syntax("dangling escape in set");
        lo = peek();
      }
      ++pos;
      if (!done() && peek() == '-' && pos + 1 < src.size() && src[pos + 1] != ']') {
        ++pos;
        char hi = peek();
        if (hi == '\\') {
          ++pos;
          if (done()) syntax("dangling escape in set");
          hi = peek();
        }
        ++pos;
        if (hi < lo) syntax("set range out of order");
        for (char x = lo; x <= hi; ++x) members.push_back(x);
      } else {
        members.push_back(lo);
      }
    }
    if (done()) syntax("unterminated set");
    ++pos; // ']'
    if (members.empty()) syntax("empty set");
    return class_node(std::move(members));
  }
};

} // namespace

FiniteRegex parse_regex(const std::string& pattern) {
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (static_cast<unsigned char>(pattern[i]) > 127)
      fail(Errc::non_ascii_input, "non-ASCII byte in pattern", long(i));
  Parser p(pattern);
  return FiniteRegex(pattern, p.parse());
}

namespace {

// Continuation-passing backtracker; repeat counts bound the recursion.
bool match_node(const RegexNode& n, std::string_view s, std::size_t i,
                const std::function<bool(std::size_t)>& cont) {
  switch (n.kind) {
    case RegexNode::Kind::Literal:
      return i < s.size() && s[i] == n.lit && cont(i + 1);
    case RegexNode::Kind::Class:
      return i < s.size() && n.members.find(s[i]) != std::string::npos && cont(i + 1);
    case RegexNode::Kind::Concat: {
      std::function<bool(std::size_t, std::size_t)> step = [&](std::size_t k, std::size_t at) {
        if (k == n.children.size()) return cont(at);
        return match_node(*n.children[k], s, at,
                          [&, k](std::size_t next) { return step(k + 1, next); });
      };
      return step(0, i);
    }
    case RegexNode::Kind::Alternation:
      for (const auto& c : n.children)
        if (match_node(*c, s, i, cont)) return true;
      return false;
    case RegexNode::Kind::Optional:
      if (match_node(*n.children[0], s, i, cont)) return true;
      return cont(i);
    case RegexNode::Kind::Repeat: {
      std::function<bool(int, std::size_t)> go = [&](int count, std::size_t at) {
        if (count >= n.rep_min && cont(at)) return true;
        if (count >= n.rep_max) return false;
        return match_node(*n.children[0], s, at,
                          [&, count](std::size_t next) { return go(count + 1, next); });
      };
      return go(0, i);
    }
  }
  return false;
}

void sample_node(const RegexNode& n, Rng& rng, std::string& out) {
  switch (n.kind) {
    case RegexNode::Kind::Literal:
      out.push_back(n.lit);
      break;
    case RegexNode::Kind::Class:
      out.push_back(n.members[rng.below(n.members.size())]);
      break;
    case RegexNode::Kind::Concat:
      for (const auto& c : n.children) sample_node(*c, rng, out);
      break;
    case RegexNode::Kind::Alternation:
      sample_node(*n.children[rng.below(n.children.size())], rng, out);
      break;
    case RegexNode::Kind::Optional:
      if (rng.below(2) == 1) sample_node(*n.children[0], rng, out);
      break;
    case RegexNode::Kind::Repeat: {
      int count = n.rep_min + int(rng.below(uint64_t(n.rep_max - n.rep_min) + 1));
      for (int k = 0; k < count; ++k) sample_node(*n.children[0], rng, out);
      break;
    }
  }
}

} // namespace

bool regex_match(const FiniteRegex& r, std::string_view s) {
  return match_node(r.root(), s, 0, [&](std::size_t end) { return end == s.size(); });
}

std::string xeger_sample(const FiniteRegex& r, Rng& rng) {
  std::string out;
  sample_node(r.root(), rng, out);
  return out;
}

} // namespace xtruct
