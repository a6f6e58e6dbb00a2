#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

enum class Errc {
  no_identity,
  not_latin_square,
  not_associative,
  too_large,
  invalid_action,
  bad_parameter,
  index_out_of_range,
  foreign_subgroup,
  not_normal,
  unknown_check,
  parse_error,
  io_error,
};

/// Stable snake_case name, used verbatim in machine-readable error output.
const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace cayley
