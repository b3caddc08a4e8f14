#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antoine {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A navigation step indexed a missing slot or tried to descend into a leaf.
class PathError : public Error {
 public:
  using Error::Error;
};

/// A point address does not resolve in the given sequence.
class AddressError : public Error {
 public:
  using Error::Error;
};

/// An analysis that needs a full tower met a Truncation marker.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A list of index declarations does not form a properly nested chain.
class NestingError : public Error {
 public:
  using Error::Error;
};

/// An operation's structural hypothesis is not satisfied by the input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A node has the wrong chain shape for the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text or file input could not be parsed. `position` is a byte offset
/// into the input where scanning stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace antoine
