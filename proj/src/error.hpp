#pragma once

#include <stdexcept>
#include <string>

namespace elsv {

enum class ErrorCode {
  InvalidArgument = 1,
  Unstable,
  Precondition,
  Parse,
  Io,
  Resource,
  Precision,
  Unsupported,
  Consistency,
  MissingEntry,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Single exception type for the library; the code tells callers (and the C
/// API) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace elsv
