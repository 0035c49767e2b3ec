#include "xtructure.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace xtruct {

void Hyperparams::canonicalize_delimiters() {
  std::sort(delimiter_set.begin(), delimiter_set.end());
  delimiter_set.erase(std::unique(delimiter_set.begin(), delimiter_set.end()),
                      delimiter_set.end());
}

bool Hyperparams::merge_compatible(const Hyperparams& o) const {
  return max_branches == o.max_branches && capture_threshold == o.capture_threshold &&
         alpha == o.alpha && chi_sq_p == o.chi_sq_p && delimiter_set == o.delimiter_set &&
         sample_cap == o.sample_cap;
}

Tokenized tokenize(std::string_view tuple, const std::string& delimiter_set) {
  Tokenized out;
  std::string cur;
  for (char c : tuple) {
    if (delimiter_set.find(c) != std::string::npos) {
      out.tokens.push_back(std::move(cur));
      cur.clear();
      out.delims.push_back(c);
    } else {
      cur.push_back(c);
    }
  }
  out.tokens.push_back(std::move(cur));
  return out;
}

void TokenStructure::fit(std::string_view token) {
  if (layers.size() < token.size()) layers.resize(token.size());
  for (std::size_t i = 0; i < token.size(); ++i) layers[i].fit_char(token[i]);
}

void Branch::seed(const Tokenized& t) {
  tokens.clear();
  tokens.resize(t.tokens.size());
  delims = t.delims;
  for (std::size_t i = 0; i < t.tokens.size(); ++i) tokens[i].fit(t.tokens[i]);
}

void Branch::absorb(const Tokenized& t) {
  if (tokens.size() < t.tokens.size()) tokens.resize(t.tokens.size());
  for (std::size_t i = 0; i < t.tokens.size(); ++i) tokens[i].fit(t.tokens[i]);
  // Positions past the stored hinge list keep the newcomer's delimiters.
  for (std::size_t i = delims.size(); i < t.delims.size(); ++i) delims.push_back(t.delims[i]);
}

Xtructure::Xtructure(Hyperparams p)
    : params_(std::move(p)), branching_threshold_(params_.branch_threshold),
      rng_(params_.rng_seed) {
  params_.canonicalize_delimiters();
}

uint64_t Xtructure::total_support() const {
  uint64_t s = 0;
  for (const auto& b : branches_) s += b.support;
  return s;
}

void append_escaped(std::string& out, char c) {
  if (c == '|' || c == '\\' || c == '(' || c == ')') out.push_back('\\');
  out.push_back(c);
}

namespace {

std::string render_branch(const Branch& b, const CompressParams& cp) {
  std::string out;
  for (std::size_t i = 0; i < b.tokens.size(); ++i) {
    for (const SymbolLayer& layer : b.tokens[i].layers) {
      const LayerRep& rep = layer.rep(cp);
      switch (rep.kind) {
        case RepKind::CLASS:
          out += class_glyph(rep.cls);
          break;
        case RepKind::OR_LIST: {
          out.push_back('(');
          for (std::size_t j = 0; j < rep.chars.size(); ++j) {
            if (j) out.push_back('|');
            append_escaped(out, rep.chars[j]);
          }
          out.push_back(')');
          break;
        }
        case RepKind::LITERAL:
          append_escaped(out, rep.chars[0]);
          break;
      }
    }
    if (i < b.delims.size()) append_escaped(out, b.delims[i]);
  }
  return out;
}

} // namespace

std::string Xtructure::serialize() const {
  if (branches_.empty()) fail(Errc::empty_xtructure, "serialize on empty model");
  CompressParams cp = params_.compress();
  std::vector<std::pair<uint64_t, std::string>> rendered;
  rendered.reserve(branches_.size());
  for (const Branch& b : branches_) rendered.emplace_back(b.support, render_branch(b, cp));
  std::stable_sort(rendered.begin(), rendered.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::string out;
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    if (i) out.push_back('|');
    out += rendered[i].second;
  }
  return out;
}

std::string Xtructure::generate(Rng& rng) const {
  if (branches_.empty()) fail(Errc::empty_xtructure, "generate on empty model");
  uint64_t total = total_support();
  const Branch* pick = &branches_.back();
  if (total > 0) {
    uint64_t r = rng.below(total);
    for (const Branch& b : branches_) {
      if (r < b.support) {
        pick = &b;
        break;
      }
      r -= b.support;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < pick->tokens.size(); ++i) {
    for (const SymbolLayer& layer : pick->tokens[i].layers) {
      uint64_t r = rng.below(layer.total());
      for (int c = 0; c < 128; ++c) {
        uint32_t n = layer.counts()[c];
        if (r < n) {
          out.push_back(static_cast<char>(c));
          break;
        }
        r -= n;
      }
    }
    if (i < pick->delims.size()) out.push_back(pick->delims[i]);
  }
  return out;
}

void Xtructure::freeze() const {
  CompressParams cp = params_.compress();
  for (const Branch& b : branches_)
    for (const TokenStructure& t : b.tokens)
      for (const SymbolLayer& l : t.layers) l.freeze(cp);
}

namespace {

using nlohmann::json;

json layer_to_json(const SymbolLayer& l) {
  json counts = json::object();
  for (int c = 0; c < 128; ++c) {
    uint32_t n = l.counts()[c];
    if (n > 0) counts[std::string(1, char(c))] = n;
  }
  return json{{"counts", std::move(counts)}};
}

SymbolLayer layer_from_json(const json& j) {
  SymbolLayer l;
  const json& counts = j.at("counts");
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it.key().size() != 1)
      fail(Errc::invalid_argument, "model counts key must be a single character");
    uint64_t n = it.value().get<uint64_t>();
    for (uint64_t k = 0; k < n; ++k) l.fit_char(it.key()[0]);
  }
  return l;
}

} // namespace

std::string Xtructure::to_json_string() const {
  json j;
  j["version"] = 1;
  j["hyperparameters"] = {
      {"alpha", params_.alpha},
      {"branching_threshold", branching_threshold_},
      {"capture_threshold", params_.capture_threshold},
      {"chi_sq_p", params_.chi_sq_p},
      {"delimiter_set", params_.delimiter_set},
      {"initial_branch_threshold", params_.branch_threshold},
      {"max_branches", params_.max_branches},
      {"rng_seed", params_.rng_seed},
      {"sample_cap", params_.sample_cap},
  };
  json branches = json::array();
  for (const Branch& b : branches_) {
    json tokens = json::array();
    for (const TokenStructure& t : b.tokens) {
      json layers = json::array();
      for (const SymbolLayer& l : t.layers) layers.push_back(layer_to_json(l));
      tokens.push_back(json{{"layers", std::move(layers)}});
    }
    json delims = json::array();
    for (char d : b.delims) delims.push_back(std::string(1, d));
    branches.push_back(json{{"delimiters", std::move(delims)},
                            {"sample_words", b.sample_words},
                            {"support", b.support},
                            {"tokens", std::move(tokens)}});
  }
  j["branches"] = std::move(branches);
  return j.dump(2);
}

Xtructure Xtructure::from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("model parse: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1)
      fail(Errc::invalid_argument, "unsupported model version");
    const json& h = j.at("hyperparameters");
    Hyperparams p;
    p.alpha = h.at("alpha").get<double>();
    p.capture_threshold = h.at("capture_threshold").get<double>();
    p.chi_sq_p = h.at("chi_sq_p").get<double>();
    p.delimiter_set = h.at("delimiter_set").get<std::string>();
    p.branch_threshold = h.at("initial_branch_threshold").get<double>();
    p.max_branches = h.at("max_branches").get<int>();
    p.rng_seed = h.at("rng_seed").get<uint64_t>();
    p.sample_cap = h.at("sample_cap").get<std::size_t>();
    Xtructure x(p);
    x.branching_threshold_ = h.at("branching_threshold").get<double>();
    for (const json& bj : j.at("branches")) {
      Branch b;
      b.support = bj.at("support").get<uint64_t>();
      for (const json& d : bj.at("delimiters")) {
        std::string s = d.get<std::string>();
        if (s.size() != 1) fail(Errc::invalid_argument, "delimiter must be one character");
        b.delims.push_back(s[0]);
      }
      for (const json& tj : bj.at("tokens")) {
        TokenStructure t;
        for (const json& lj : tj.at("layers")) t.layers.push_back(layer_from_json(lj));
        b.tokens.push_back(std::move(t));
      }
      b.sample_words = bj.at("sample_words").get<std::vector<std::string>>();
      x.branches_.push_back(std::move(b));
    }
    x.freeze();
    return x;
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("model shape: ") + e.what());
  }
}

void Xtructure::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::write_failure, "cannot open for write: " + path);
  out << to_json_string();
  out.put('\n');
  if (!out) fail(Errc::write_failure, "write failed: " + path);
}

Xtructure Xtructure::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::file_not_found, "cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_string(ss.str());
}

} // namespace xtruct
