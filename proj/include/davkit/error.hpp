#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace davkit {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A ground-set or sequence text that does not follow the grammar.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidArgument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// 64-bit arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An enumeration guard or state-space cap was hit. The computation was
// abandoned, not answered.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A proved theorem appears falsified. Always an implementation bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace davkit
