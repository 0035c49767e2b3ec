#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace xtruct {

// Five-way partition of ASCII. DIGIT/UPPER/LOWER/WHITESPACE carry the obvious
// members; everything else (punctuation, control bytes) lands in PUNCT_OTHER.
enum class CharClass : uint8_t {
  DIGIT = 0,
  UPPER = 1,
  LOWER = 2,
  WHITESPACE = 3,
  PUNCT_OTHER = 4,
};

inline constexpr int kNumCharClasses = 5;

constexpr CharClass class_of(unsigned char c) {
  if (c >= '0' && c <= '9') return CharClass::DIGIT;
  if (c >= 'A' && c <= 'Z') return CharClass::UPPER;
  if (c >= 'a' && c <= 'z') return CharClass::LOWER;
  if (c == ' ' || c == '\t') return CharClass::WHITESPACE;
  return CharClass::PUNCT_OTHER;
}

inline CharClass get_ascii_class(char ch) {
  unsigned char c = static_cast<unsigned char>(ch);
  if (c > 127) fail(Errc::non_ascii_input, "non-ASCII byte " + std::to_string(int(c)));
  return class_of(c);
}

// Bin counts used by the uniformity test: printable members only.
constexpr int class_size(CharClass k) {
  switch (k) {
    case CharClass::DIGIT: return 10;
    case CharClass::UPPER: return 26;
    case CharClass::LOWER: return 26;
    case CharClass::WHITESPACE: return 2;
    case CharClass::PUNCT_OTHER: return 32;
  }
  return 0;
}

// Printable members of a class, in ascending byte order.
std::string class_members(CharClass k);

const char* class_name(CharClass k);

// Pattern-string atom for a whole class: \d \u \l \s \p.
const char* class_glyph(CharClass k);

// Byte substituted for non-ASCII input at ingestion (a PUNCT_OTHER member).
inline constexpr char kNonAsciiSubstitute = '\x7f';

// Replaces bytes >= 0x80 in place; returns how many were replaced.
std::size_t sanitize_ascii(std::string& s);

} // namespace xtruct
