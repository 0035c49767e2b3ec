#pragma once

#include <stdexcept>
#include <string>

namespace xtruct {

enum class Errc {
  ok = 0,
  non_ascii_input,
  empty_tuple,
  empty_layer,
  empty_xtructure,
  hyperparameter_mismatch,
  empty_sequence,
  unsupported_construct,
  syntax_error,
  empty_triple_set,
  band_shape_mismatch,
  too_few_models,
  empty_library,
  file_not_found,
  column_not_found,
  malformed_csv,
  write_failure,
  invalid_argument,
};

// Carries a code plus a position payload (regex offset, csv line) where one applies.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg, long where = -1)
      : std::runtime_error(std::move(msg)), code_(code), where_(where) {}

  Errc code() const noexcept { return code_; }
  long where() const noexcept { return where_; }

private:
  Errc code_;
  long where_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, long where = -1) {
  throw Error(code, msg, where);
}

} // namespace xtruct
