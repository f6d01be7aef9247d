#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glr {

enum class ErrorKind {
  InvalidInput,
  UnsupportedShape,
  BudgetExceeded,
  Precondition,
  Overflow,
};

inline std::string_view error_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::UnsupportedShape: return "unsupported_shape";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Overflow: return "overflow";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view code() const noexcept { return error_code(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool cond, ErrorKind kind, const std::string& message) {
  if (!cond) fail(kind, message);
}

}  // namespace glr
