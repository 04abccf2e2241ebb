#pragma once

#include <stdexcept>
#include <string>

namespace ponsyz {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  NotDivisible,
  Degenerate,
  Precondition,
  RetryExhausted,
  Internal,
};

/// Single exception type for the library; `kind()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::NotDivisible: return "not_divisible";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::RetryExhausted: return "retry_exhausted";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace ponsyz
