#include "signature.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace xtruct {

std::set<uint64_t> triple_set(const Xtructure& x) {
  if (x.branches().empty()) fail(Errc::empty_xtructure, "triples of empty model");
  CompressParams cp = x.params().compress();
  std::set<uint64_t> out;
  for (const Branch& b : x.branches()) {
    for (std::size_t h = 0; h < b.tokens.size(); ++h) {
      const TokenStructure& tok = b.tokens[h];
      for (std::size_t i = 0; i < tok.layers.size(); ++i) {
        const LayerRep& rep = tok.layers[i].rep(cp);
        PositionalTriple t;
        t.hinge = uint32_t(h);
        t.index = uint32_t(i);
        if (rep.kind == RepKind::CLASS) {
          t.is_class = true;
          t.cls = rep.cls;
          out.insert(t.packed());
        } else {
          for (char c : rep.chars) {
            t.is_class = false;
            t.ch = c;
            out.insert(t.packed());
          }
        }
      }
    }
  }
  return out;
}

std::vector<uint64_t> minhash_signature(const std::set<uint64_t>& triples, std::size_t k,
                                        uint64_t seed) {
  if (triples.empty()) fail(Errc::empty_triple_set, "minhash of empty triple set");
  std::vector<uint64_t> sig(k, UINT64_MAX);
  Rng salts(mix64(seed));
  for (std::size_t j = 0; j < k; ++j) {
    uint64_t salt = salts.next();
    uint64_t best = UINT64_MAX;
    for (uint64_t t : triples) best = std::min(best, mix64(t ^ salt));
    sig[j] = best;
  }
  return sig;
}

double estimated_jaccard(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  if (a.size() != b.size() || a.empty())
    fail(Errc::band_shape_mismatch, "signature lengths differ");
  std::size_t eq = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == b[i]) ++eq;
  return double(eq) / double(a.size());
}

std::vector<std::pair<std::size_t, std::size_t>> lsh_candidates(
    const std::vector<std::vector<uint64_t>>& signatures, std::size_t bands, std::size_t rows) {
  if (bands == 0 || rows == 0) fail(Errc::band_shape_mismatch, "bands and rows must be positive");
  for (const auto& s : signatures)
    if (s.size() != bands * rows)
      fail(Errc::band_shape_mismatch, "signature length must equal bands*rows");

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t b = 0; b < bands; ++b) {
    // Exact band-slice equality, no hash-collision false positives.
    std::map<std::vector<uint64_t>, std::vector<std::size_t>> buckets;
    for (std::size_t col = 0; col < signatures.size(); ++col) {
      std::vector<uint64_t> slice(signatures[col].begin() + long(b * rows),
                                  signatures[col].begin() + long((b + 1) * rows));
      buckets[std::move(slice)].push_back(col);
    }
    for (const auto& [slice, cols] : buckets)
      for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j) pairs.emplace(cols[i], cols[j]);
  }
  return {pairs.begin(), pairs.end()};
}

} // namespace xtruct
