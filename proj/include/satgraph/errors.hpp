#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satgraph {

// Base of all library errors. CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex capacity (512) exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Bad argument (vertex out of range, u == v, malformed pattern string, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A construction's preconditions do not hold (n below minimum, part size < 2).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A request is outside the operation's domain (e.g. unsatisfiable saturation search).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 input; carries the byte offset of the first bad byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace satgraph
