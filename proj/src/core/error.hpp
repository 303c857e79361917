#pragma once

#include <stdexcept>
#include <string>

namespace lierep {

// Mirrors the status codes of the C API (lierep.h).
enum class ErrorCode : int {
  invalid_argument = 1,
  invalid_spec = 2,
  not_dominant = 3,
  not_a_character = 4,
  invalid_embedding = 5,
  singular_point = 6,
  not_locally_finite = 7,
  insufficient_samples = 8,
  invalid_face = 9,
  io_error = 10,
  internal = 11,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lierep
