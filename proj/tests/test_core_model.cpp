#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "error.hpp"
#include "learner.hpp"
#include "oracles.hpp"
#include "signature.hpp"
#include "stats.hpp"
#include "xtructure.hpp"

using namespace xtruct;

TEST_CASE("ascii classes partition the byte range") {
  int counts[kNumCharClasses] = {};
  for (int c = 0; c <= 127; ++c) counts[int(get_ascii_class(char(c)))]++;
  CHECK(counts[int(CharClass::DIGIT)] == 10);
  CHECK(counts[int(CharClass::UPPER)] == 26);
  CHECK(counts[int(CharClass::LOWER)] == 26);
  CHECK(counts[int(CharClass::WHITESPACE)] == 2);
  // control bytes fall into the catch-all, printable punct alone is 32
  CHECK(counts[int(CharClass::PUNCT_OTHER)] == 128 - 64);
  CHECK(class_members(CharClass::PUNCT_OTHER).size() == 32);

  CHECK(get_ascii_class('7') == CharClass::DIGIT);
  CHECK(get_ascii_class('Q') == CharClass::UPPER);
  CHECK(get_ascii_class('q') == CharClass::LOWER);
  CHECK(get_ascii_class('\t') == CharClass::WHITESPACE);
  CHECK(get_ascii_class('@') == CharClass::PUNCT_OTHER);
  CHECK_THROWS_AS(get_ascii_class(char(0xc3)), Error);
}

TEST_CASE("tokenize splits on every delimiter occurrence") {
  auto t = tokenize("10/1/2017", "/");
  REQUIRE(t.tokens.size() == 3);
  CHECK(t.tokens[0] == "10");
  CHECK(t.tokens[1] == "1");
  CHECK(t.tokens[2] == "2017");
  CHECK(t.delims == "//");

  auto plain = tokenize("12345", "-/");
  CHECK(plain.tokens == std::vector<std::string>{"12345"});
  CHECK(plain.delims.empty());

  auto adjacent = tokenize("A--B", "-");
  CHECK(adjacent.tokens == std::vector<std::string>{"A", "", "B"});
  CHECK(adjacent.delims == "--");

  auto boundary = tokenize("/x/", "/");
  CHECK(boundary.tokens == std::vector<std::string>{"", "x", ""});
  CHECK(boundary.delims == "//");
}

TEST_CASE("tokenize round-trips arbitrary strings") {
  Rng rng(7);
  const std::string delims = " #,-./:;@_";
  for (int trial = 0; trial < 300; ++trial) {
    std::string s;
    std::size_t len = rng.below(24);
    for (std::size_t i = 0; i < len; ++i) s.push_back(char(0x20 + rng.below(95)));
    auto t = tokenize(s, delims);
    REQUIRE(t.tokens.size() == t.delims.size() + 1);
    std::string rebuilt;
    for (std::size_t i = 0; i < t.tokens.size(); ++i) {
      rebuilt += t.tokens[i];
      if (i < t.delims.size()) rebuilt.push_back(t.delims[i]);
    }
    CHECK(rebuilt == s);
    for (const std::string& tok : t.tokens)
      for (char c : tok) CHECK(delims.find(c) == std::string::npos);
  }
}

TEST_CASE("chi-squared tail agrees with quadrature") {
  // Implementation uses incomplete-gamma expansions, reference integrates the density.
  for (auto [stat, df] : std::vector<std::pair<double, int>>{
           {0.5, 1}, {1.0, 1}, {3.84, 1}, {2.0, 4}, {9.49, 4}, {16.92, 9},
           {5.0, 9}, {30.0, 9}, {12.0, 25}, {37.65, 25}, {80.0, 25}, {44.0, 35}}) {
    double impl = chi_sq_p_value(stat, df);
    double ref = oracle::chi_sq_tail(stat, df);
    CHECK(impl == doctest::Approx(ref).epsilon(1e-8));
  }
  CHECK(chi_sq_p_value(0.0, 9) == 1.0);
}

namespace {
SymbolLayer layer_of(const std::map<char, int>& counts) {
  SymbolLayer l;
  for (auto& [c, n] : counts)
    for (int i = 0; i < n; ++i) l.fit_char(c);
  return l;
}
} // namespace

TEST_CASE("layer compression: uniform digits become the class") {
  SymbolLayer l;
  for (int rep = 0; rep < 20; ++rep)
    for (char c = '0'; c <= '9'; ++c) l.fit_char(c);
  CompressParams p;
  LayerRep rep = compress_layer(l, p);
  CHECK(rep.kind == RepKind::CLASS);
  CHECK(rep.cls == CharClass::DIGIT);
}

TEST_CASE("layer compression: two-spike digits become an or-list") {
  // 50/50 over {'0','1'}: bins 10, statistic 400, tail ~1e-80 -> reject.
  SymbolLayer l = layer_of({{'0', 50}, {'1', 50}});
  LayerRep rep = compress_layer(l, CompressParams{});
  CHECK(rep.kind == RepKind::OR_LIST);
  CHECK(rep.chars == "01");
}

TEST_CASE("layer compression: capture cutoff drops the rare tail") {
  // 0.6/0.3/0.1: the first two cover 0.9 >= 0.85, 'z' stays out.
  SymbolLayer l = layer_of({{'x', 60}, {'y', 30}, {'z', 10}});
  LayerRep rep = compress_layer(l, CompressParams{});
  CHECK(rep.kind == RepKind::OR_LIST);
  CHECK(rep.chars == "xy");
}

TEST_CASE("layer compression: single character is a literal") {
  SymbolLayer l = layer_of({{'X', 7}});
  LayerRep rep = compress_layer(l, CompressParams{});
  CHECK(rep.kind == RepKind::LITERAL);
  CHECK(rep.chars == "X");
}

TEST_CASE("layer compression: thin uniform sample lacks the mass for a class call") {
  // One of each digit: a zero statistic, but 10 observations over 10 bins is
  // far under the per-bin floor, so the frequency list wins (9 of 10 chars
  // reach the 0.85 capture).
  std::map<char, int> counts;
  for (char c = '0'; c <= '9'; ++c) counts[c] = 1;
  SymbolLayer l = layer_of(counts);
  LayerRep rep = compress_layer(l, CompressParams{});
  CHECK(rep.kind == RepKind::OR_LIST);
  CHECK(rep.chars == "012345678");
}

TEST_CASE("layer compression matches the reference decision chain") {
  Rng rng(1234);
  CompressParams p;
  for (int trial = 0; trial < 400; ++trial) {
    SymbolLayer l;
    oracle::Counts ref_counts;
    int distinct = 1 + int(rng.below(6));
    std::string alphabet = "0123456789ABCXYZabcxyz.-@# ";
    for (int d = 0; d < distinct; ++d) {
      char c = alphabet[rng.below(alphabet.size())];
      int n = 1 + int(rng.below(120));
      ref_counts[c] += n;
      for (int i = 0; i < n; ++i) l.fit_char(c);
    }
    oracle::Rep expect = oracle::compress(ref_counts, p.capture_threshold, p.chi_sq_p);
    LayerRep got = compress_layer(l, p);
    CHECK(int(got.kind) == expect.kind);
    if (expect.kind == 0) CHECK(int(got.cls) == expect.cls);
    else CHECK(got.chars == expect.chars);
  }
}

TEST_CASE("empty layer refuses to compress") {
  SymbolLayer l;
  CHECK_THROWS_AS(compress_layer(l, CompressParams{}), Error);
}

TEST_CASE("generation stays inside observed characters") {
  Hyperparams p;
  p.rng_seed = 11;
  Xtructure x(p);
  learn_tuple(x, "A1");
  learn_tuple(x, "A2");
  Rng rng(99);
  std::set<std::string> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(x.generate(rng));
  for (const std::string& s : seen) CHECK((s == "A1" || s == "A2"));
  CHECK(seen.size() == 2); // both appear over 1000 draws
}

TEST_CASE("serialization renders classes, or-lists, literals, and branches") {
  Hyperparams p;
  SUBCASE("uniform digit column compresses to the class glyphs") {
    p.rng_seed = 5;
    Xtructure x(p);
    Rng rng(501);
    for (int i = 0; i < 200; ++i) {
      std::string zip;
      for (int j = 0; j < 5; ++j) zip.push_back(char('0' + rng.below(10)));
      learn_tuple(x, zip);
    }
    // Seed chosen so every position passes the uniformity test; the oracle
    // below confirms each layer's decision independently.
    const Branch& b = x.branches()[0];
    for (const auto& tok : b.tokens)
      for (const auto& layer : tok.layers) {
        oracle::Rep r = oracle::compress(oracle::counts_of(layer), p.capture_threshold,
                                         p.chi_sq_p);
        REQUIRE(r.kind == 0);
      }
    CHECK(x.serialize() == "\\d\\d\\d\\d\\d");
  }
  SUBCASE("mixed id column yields support-ordered branches") {
    Xtructure x(p);
    for (int i = 0; i < 40; ++i) learn_tuple(x, "123456789" + std::to_string(i % 10));
    for (int i = 0; i < 10; ++i) learn_tuple(x, "N/A");
    REQUIRE(x.branches().size() == 2);
    std::string s = x.serialize();
    CHECK(s.find('|') != std::string::npos);
    CHECK(s.substr(s.size() - 5) == "N/\\u?" ? false : true); // shape checked below
    // digit branch first (higher support), N/A renders literally
    CHECK(s.rfind("N/A") == s.size() - 3);
    CHECK(s.find("N/A") > 0);
  }
  SUBCASE("metacharacters in data are escaped") {
    Xtructure x(p);
    learn_tuple(x, "(a|b)");
    CHECK(x.serialize() == "\\(a\\|b\\)");
  }
}

TEST_CASE("serialization orders branches by support then text") {
  Hyperparams p;
  Xtructure x(p);
  for (int i = 0; i < 3; ++i) learn_tuple(x, "BBB");
  for (int i = 0; i < 9; ++i) learn_tuple(x, "111");
  CHECK(x.serialize() == "111|BBB");
}

TEST_CASE("model json round-trips byte-exactly and preserves behavior") {
  Hyperparams p;
  p.rng_seed = 77;
  Xtructure x(p);
  std::vector<std::string> column = {"CHEMBL25",  "CHEMBL192", "CHEMBL3810",
                                     "N/A",       "CHEMBL771", "CHEMBL8",
                                     "quote\"me", "comma,val", "CHEMBL44"};
  for (const auto& v : column) learn_tuple(x, v);
  x.freeze();

  std::string j1 = x.to_json_string();
  Xtructure y = Xtructure::from_json_string(j1);
  CHECK(y.to_json_string() == j1);
  CHECK(y.serialize() == x.serialize());
  CHECK(triple_set(y) == triple_set(x));
  for (const auto& probe : {"CHEMBL999", "N/A", "zzz", "12-34", "CHEMBL25"}) {
    FitScore a = xtructure_distance(x, probe);
    FitScore b = xtructure_distance(y, probe);
    CHECK(a.raw == b.raw);
    CHECK(a.normalized == b.normalized);
  }
  CHECK(y.branches().size() == x.branches().size());
  CHECK(y.total_support() == x.total_support());
  CHECK(y.branching_threshold() == x.branching_threshold());
}

TEST_CASE("model file save/load round trip") {
  Hyperparams p;
  Xtructure x(p);
  for (int i = 0; i < 30; ++i) learn_tuple(x, "617-555-0" + std::to_string(100 + i));
  std::string path = "roundtrip_model.json";
  x.save(path);
  Xtructure y = Xtructure::load(path);
  CHECK(y.to_json_string() == x.to_json_string());
  std::remove(path.c_str());
  CHECK_THROWS_AS(Xtructure::load("does_not_exist_model.json"), Error);
}

TEST_CASE("serialize and generate refuse an unlearned model") {
  Xtructure x;
  Rng rng(1);
  CHECK_THROWS_AS(x.serialize(), Error);
  CHECK_THROWS_AS(x.generate(rng), Error);
}
