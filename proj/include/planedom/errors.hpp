#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace planedom {

/// Domain error with a stable machine-readable code (e.g. "NotPrime",
/// "DimensionMismatch"). The CLI maps these to exit code 2 and prints
/// {"error": code, "message": ...} on stderr.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace planedom
