#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace milnor {

/// Error with a stable machine-readable code. The CLI surfaces the code and
/// message as a JSON diagnostic on stderr and exits with status 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Malformed or inconsistent input: documents, covectors, weight files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented operation precondition does not hold for the given call.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace milnor
