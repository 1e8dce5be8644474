#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlinks {

// Invalid parameters: out-of-range strand indices, malformed specs, etc.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text that does not match one of the grammars. `position` is the
// zero-based column at which parsing stopped.
class ParseError : public ParameterError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ParameterError("parse error at column " + std::to_string(position + 1) +
                       ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Valid input that an operation does not handle (e.g. the one-variable
// Alexander polynomial of a multi-component closure).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource bound was exceeded (Kauffman crossing cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-width coefficient arithmetic overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace tlinks
