#include "ascii.hpp"

namespace xtruct {

std::string class_members(CharClass k) {
  std::string out;
  switch (k) {
    case CharClass::DIGIT:
      for (char c = '0'; c <= '9'; ++c) out.push_back(c);
      break;
    case CharClass::UPPER:
      for (char c = 'A'; c <= 'Z'; ++c) out.push_back(c);
      break;
    case CharClass::LOWER:
      for (char c = 'a'; c <= 'z'; ++c) out.push_back(c);
      break;
    case CharClass::WHITESPACE:
      out = "\t ";
      break;
    case CharClass::PUNCT_OTHER:
      for (int c = 0x21; c <= 0x7e; ++c) {
        CharClass k2 = class_of(static_cast<unsigned char>(c));
        if (k2 == CharClass::PUNCT_OTHER) out.push_back(static_cast<char>(c));
      }
      break;
  }
  return out;
}

const char* class_name(CharClass k) {
  switch (k) {
    case CharClass::DIGIT: return "DIGIT";
    case CharClass::UPPER: return "UPPER";
    case CharClass::LOWER: return "LOWER";
    case CharClass::WHITESPACE: return "WHITESPACE";
    case CharClass::PUNCT_OTHER: return "PUNCT_OTHER";
  }
  return "?";
}

const char* class_glyph(CharClass k) {
  switch (k) {
    case CharClass::DIGIT: return "\\d";
    case CharClass::UPPER: return "\\u";
    case CharClass::LOWER: return "\\l";
    case CharClass::WHITESPACE: return "\\s";
    case CharClass::PUNCT_OTHER: return "\\p";
  }
  return "?";
}

std::size_t sanitize_ascii(std::string& s) {
  std::size_t n = 0;
  for (char& c : s) {
    if (static_cast<unsigned char>(c) > 127) {
      c = kNonAsciiSubstitute;
      ++n;
    }
  }
  return n;
}

} // namespace xtruct
