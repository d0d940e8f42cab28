#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's documented precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An enumeration would exceed its configured cap; results are never truncated
/// silently.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap, int depth)
      : Error(what + " (cap " + std::to_string(cap) + ", d = " +
              std::to_string(depth) + ")"),
        cap_(cap),
        depth_(depth) {}
  std::uint64_t cap() const { return cap_; }
  int depth() const { return depth_; }

 private:
  std::uint64_t cap_;
  int depth_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed; indicates a bug, not bad input.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsym
