#pragma once

#include <stdexcept>
#include <string>

namespace majority {

enum class ErrorCode {
  kInvalidArgument,
  kPrecondition,
  kNotFound,
  kBudgetExhausted,
  kCapExceeded,
  kParse,
  kInternal,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception type thrown by every operation in the library. The code is what
/// the C API maps onto its status values; the message names the violated
/// condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace majority
