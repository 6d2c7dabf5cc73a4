#pragma once

#include <stdexcept>
#include <string>

namespace goodline {

// Maps onto CLI exit codes: usage 2, input data 3, resource budget 4, invariant 5.
enum class ErrorKind { Usage, InputData, Resource, Invariant };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Stable machine-readable identifier, e.g. "reducible_modulus".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_input(std::string code, const std::string& msg) {
  throw Error(ErrorKind::InputData, std::move(code), msg);
}
[[noreturn]] inline void fail_resource(std::string code, const std::string& msg) {
  throw Error(ErrorKind::Resource, std::move(code), msg);
}
[[noreturn]] inline void fail_invariant(std::string code, const std::string& msg) {
  throw Error(ErrorKind::Invariant, std::move(code), msg);
}

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return 2;
    case ErrorKind::InputData: return 3;
    case ErrorKind::Resource: return 4;
    case ErrorKind::Invariant: return 5;
  }
  return 5;
}

inline const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::InputData: return "input";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Invariant: return "invariant";
  }
  return "invariant";
}

}  // namespace goodline
