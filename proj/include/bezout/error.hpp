#pragma once

#include <stdexcept>
#include <string>

namespace bezout {

enum class Errc {
  invalid_argument,  // malformed request or arguments
  mismatch,          // nvars, field, kind or shape disagree
  out_of_range,      // index outside bounds
  invalid_spec,      // spec violates its restrictive conditions
  size_cap,          // enumeration or matrix cap exceeded
  out_of_domain,     // formula evaluated outside its validity region
  math_failure,      // seed disagreement, defect, failed membership
  parse_error,       // text or JSON could not be parsed
  internal,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace bezout
