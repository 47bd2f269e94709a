#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treehom {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A position does not exist in the tree it is applied to.
class PositionError : public Error {
 public:
  using Error::Error;
};

/// An input violates a structural invariant (ranks, states, shapes, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Byte range into a parsed input, for error reporting.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(message), span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

/// A configurable output cap was exceeded (see linearize).
class BlowupError : public Error {
 public:
  using Error::Error;
};

}  // namespace treehom
