#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xtructure.hpp"

namespace xtruct {

// A position in the compressed representation: either a concrete character or
// a whole-class marker, located by hinge count (token index) and offset
// within the token. Packed into one u64 for hashing and set algebra.
struct PositionalTriple {
  bool is_class = false;
  char ch = 0;        // when !is_class
  CharClass cls{};    // when is_class
  uint32_t hinge = 0; // tokens before this one
  uint32_t index = 0; // layer offset inside the token

  uint64_t packed() const {
    uint64_t value = is_class ? uint64_t(cls) : uint64_t(uint8_t(ch));
    return (uint64_t(is_class) << 56) | (value << 48) | (uint64_t(hinge & 0xffffff) << 24) |
           uint64_t(index & 0xffffff);
  }
};

// Triples of a model's compressed representation, deduplicated across
// branches. CLASS layers contribute one class-marker triple; OR_LIST and
// LITERAL layers contribute one triple per kept character.
std::set<uint64_t> triple_set(const Xtructure& x);

inline constexpr std::size_t kSignatureHashes = 128;
inline constexpr std::size_t kLshBands = 32;
inline constexpr std::size_t kLshRows = 4;

// k-slot minhash signature over a seeded family of 64-bit hash functions.
std::vector<uint64_t> minhash_signature(const std::set<uint64_t>& triples, std::size_t k,
                                        uint64_t seed);

// Fraction of agreeing slots; signatures must have equal length.
double estimated_jaccard(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);

// Banded index: column pairs colliding in at least one band, each band
// compared by exact row-value equality. bands*rows must equal the signature
// length. Pairs come back sorted, i < j.
std::vector<std::pair<std::size_t, std::size_t>> lsh_candidates(
    const std::vector<std::vector<uint64_t>>& signatures, std::size_t bands, std::size_t rows);

} // namespace xtruct
