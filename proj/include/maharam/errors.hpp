#pragma once

#include <stdexcept>
#include <string>

namespace maharam {

enum class ErrorCode {
  Parse,         // malformed ordinal expression, config, or move text
  Limit,         // tower depth, set size, resolution or code-range cap exceeded
  Precondition,  // a stated operation precondition does not hold
  NotFound,      // a bounded search was exhausted without a witness
  Config,        // bad key/value input
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace maharam
