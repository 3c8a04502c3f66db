#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lzroot {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotSquareFree : public PreconditionError {
 public:
  NotSquareFree() : PreconditionError("polynomial is not square-free") {}
};

class ConstantInput : public PreconditionError {
 public:
  ConstantInput() : PreconditionError("polynomial is constant") {}
};

/// gcd(f, f'') != 1, so a monotonic convex isolation is not guaranteed.
class MciNotGuaranteed : public PreconditionError {
 public:
  MciNotGuaranteed()
      : PreconditionError("gcd(f, f'') != 1: no monotonic convex isolation guaranteed") {}
};

class InvalidInterval : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotBracketing : public PreconditionError {
 public:
  NotBracketing() : PreconditionError("f does not change sign on the interval") {}
};

class DivisionByIntervalContainingZero : public PreconditionError {
 public:
  DivisionByIntervalContainingZero()
      : PreconditionError("interval division by an interval containing 0") {}
};

class IterationLimitExceeded : public Error {
 public:
  explicit IterationLimitExceeded(int cap)
      : Error("refinement exceeded the iteration cap of " + std::to_string(cap)) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnsupportedExponent : public ParseError {
 public:
  explicit UnsupportedExponent(std::size_t position)
      : ParseError("exponent must be a nonnegative integer", position) {}
};

}  // namespace lzroot

namespace lzroot {

/// A refinement invariant failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lzroot
