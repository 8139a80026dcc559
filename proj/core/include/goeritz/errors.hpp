#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goeritz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text. position() is the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Arguments outside an operation's domain (gcd(p,q) != 1, q out of range, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The lens space has a connected primitive disk complex, so there are no bridges.
class NotForest : public Error {
 public:
  using Error::Error;
};

/// Bridge search exceeded its depth limit. Never expected for valid forest inputs
/// unless the limit was set below what the lens space requires.
class DepthLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A guarded parameter (word length, depth, radius, ...) exceeded its hard cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace goeritz
