#pragma once

#include <stdexcept>
#include <string>

namespace bns {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by every operation that needs a nonzero character.
class ZeroCharacter : public Error {
 public:
  ZeroCharacter() : Error("character is identically zero") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input. `key()` names the offending JSON key or token when known.
class ParseError : public Error {
 public:
  ParseError(std::string key, const std::string& message)
      : Error(key.empty() ? message : "'" + key + "': " + message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace bns
