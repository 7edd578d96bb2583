#pragma once

#include <stdexcept>
#include <string>

namespace zprmod {

enum class errc {
  not_prime,
  bad_exponent,
  overflow,
  not_a_unit,
  dimension_mismatch,
  too_large,
  not_a_submodule,
  parse_error,
  bad_argument,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "not_prime";
    case errc::bad_exponent: return "bad_exponent";
    case errc::overflow: return "overflow";
    case errc::not_a_unit: return "not_a_unit";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::too_large: return "too_large";
    case errc::not_a_submodule: return "not_a_submodule";
    case errc::parse_error: return "parse_error";
    case errc::bad_argument: return "bad_argument";
    case errc::internal: return "internal";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace zprmod
