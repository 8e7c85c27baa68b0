#pragma once

#include <stdexcept>
#include <string>

namespace sphereloop {

enum class ErrorCode {
  Dimension = 1,     // operands of different (or unsupported) dimension
  Degenerate,        // zero vector where a direction is required
  Domain,            // input outside the domain of the operation
  Precondition,      // documented precondition violated (pole input etc.)
  Structural,        // finite model fails a required algebraic law
  Generator,         // random generation exhausted its draw budget
  Parse,             // malformed text / JSON input
  InvalidArgument,   // bad configuration values
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) throw Error(code, what);
}

}  // namespace sphereloop
